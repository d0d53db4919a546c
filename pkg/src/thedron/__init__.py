"""Transversal matroids, transversalhedra and h-vectors of cotransversal matroids."""

from . import activity, ep, matching, matroid, polytope, trees, verify
from .activity import *  # noqa: F401,F403
from .ep import *  # noqa: F401,F403
from .matching import *  # noqa: F401,F403
from .matroid import *  # noqa: F401,F403
from .polytope import *  # noqa: F401,F403
from .trees import *  # noqa: F401,F403
from .verify import *  # noqa: F401,F403

__version__ = "0.1.0"

__all__ = sorted(
    set().union(*(m.__all__ for m in (activity, ep, matching, matroid, polytope, trees, verify)))
)
