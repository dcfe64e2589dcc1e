"""Two-mode EIT condensate dynamics, fractional revivals, and atom-photon
entanglement measures, backed by the C++ core."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
