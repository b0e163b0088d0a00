"""Exact Euler calculus on finite categories.

Euler characteristics via weightings, definable functions and their prime
decompositions, Euler integration, pushforwards, and target counting on
one-way sensor networks. All arithmetic is exact (``fractions.Fraction``).
"""

from .category import *  # noqa: F401,F403
from .definable import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .euler import *  # noqa: F401,F403
from .integration import *  # noqa: F401,F403
from .rational import format_rational, parse_rational, to_fraction  # noqa: F401
from .sensor import *  # noqa: F401,F403

__version__ = "0.1.0"
