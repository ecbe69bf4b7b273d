"""Instantaneous noise-based logic gates over random telegraph waves."""

# flake8: noqa
from .circuit import CircuitFile, format_circuit, load_circuit, parse_circuit
from .errors import (ArgumentError, CircuitParseError, DimensionError,
                     DistinctnessError, GeneratorIndexError, ScheduleError,
                     UndecodableError)
from .gates import clear_bit, not_gate, xnor_gate, xor_gate
from .generator import (GeneratorBank, GeneratorId, GeneratorMask,
                        eval_mask, eval_mask_series, flip_rate,
                        generator_index, mask_product, mean_estimate,
                        sample_generator, sample_generators, split_seed,
                        telegraph_path)
from .logic import (decode_superposition, decode_term, eval_superposition,
                    eval_superposition_series, format_term, realized_mask,
                    subspace_count, subspace_count_by_summation)
from .reference_system import ReferenceSystem, WireSnapshot, new_system
from .report import Check, Report
from .runner import RunOptions, RunReport, demo, run_circuit
from .schedule import ClearGate, GateSchedule, NotGate, XnorGate, XorGate
from .settings import Settings
from .superposition import (StringTerm, Superposition, string_from_number,
                            superpose, term_from_literal)
from .verifier import (Waveform, check_engine_vs_signal, engine_waveform,
                       orthogonality_suite, presence_suite, signal_simulate,
                       statistical_presence, truth_table_check)

__version__ = '0.1.0'


def get_version():
    """Get the version of this package."""
    return __version__
