"""Jordan-Hoelder property for torsion-free classes of type-A quiver representations."""

from .quiver import Interval, IsoClass, Rep, TypeAQuiver
from .symgroup import Permutation, Transposition

__all__ = ["Interval", "IsoClass", "Rep", "TypeAQuiver", "Permutation", "Transposition"]
__version__ = "0.1.0"
