from chaosqueeze.integrator.functions import integrate
from chaosqueeze.model.object import ModelParams

from .about import __version__

assert isinstance(__version__, str)

__all__ = ("__version__", "integrate", "ModelParams")
