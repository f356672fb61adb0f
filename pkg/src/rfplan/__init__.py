"""rfplan: 2.4/5 GHz wireless availability planning toolkit.

Link budgets and power utilization, accelerating metal-plate lens design,
Fresnel-zone screen sizing with a scalar-diffraction field oracle,
polarization/MIMO effects, multi-sensor spectrum aggregation with
client-aware channel selection, and doubling-time fits for AP-count trends.
"""

from .errors import DomainError

__version__ = "0.1.0"

__all__ = ["DomainError", "__version__"]
