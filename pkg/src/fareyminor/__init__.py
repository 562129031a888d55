"""Finite constructions around the Farey graph: builders, minor-maps, grain lines and splits."""

from .errors import (
    ContractionError,
    FareyMinorError,
    GrainingError,
    InputError,
    PipelineError,
    PreconditionError,
    ResourceError,
    SupplyError,
)
from .farey import Fraction, build_farey, build_halved_farey
from .graph_core import Graph

__version__ = "0.1.0"
