"""Random ensembles, the property suite and the published-example fixtures."""

from .ensembles import EnsembleSpec, Structure, generate_matrix
from .fixtures import FIXTURES, Fixture, compute_fixture, run_paper_examples, within_band
from .suite import SuiteReport, Tally, draw_trial_inputs, run_property_suite

__all__ = [
    "FIXTURES",
    "EnsembleSpec",
    "Fixture",
    "Structure",
    "SuiteReport",
    "Tally",
    "compute_fixture",
    "draw_trial_inputs",
    "generate_matrix",
    "run_paper_examples",
    "run_property_suite",
    "within_band",
]
