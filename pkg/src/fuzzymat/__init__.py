"""Fuzzy matrix models: time-dependent data pipelines, cognitive and
relational maps, associative memories and relational equations."""

__version__ = "0.1.0"

from .errors import (DimensionError, DomainError, FuzzyMatError, InfeasibleFitError,  # noqa: E402
                     NonTerminationError, ParseError)
from .algebra import *  # noqa: E402,F401,F403
from .relations import *  # noqa: E402,F401,F403
from .cetd import *  # noqa: E402,F401,F403
from .fcm import *  # noqa: E402,F401,F403
from .frm import *  # noqa: E402,F401,F403
from .bam import *  # noqa: E402,F401,F403
from .fam import *  # noqa: E402,F401,F403
from .fre import *  # noqa: E402,F401,F403
from .cli import parse_matrix_csv, serialize_matrix_csv  # noqa: E402,F401
