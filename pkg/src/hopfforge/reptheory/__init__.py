"""Modules, simple objects, fusion rings and modular data."""
from .reps import *  # noqa: F401,F403
from .apq import *  # noqa: F401,F403
from .fusion import *  # noqa: F401,F403
from .modular import *  # noqa: F401,F403
