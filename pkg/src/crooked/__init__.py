"""Crooked multinomial construction and verification over GF(2^n).

Submodules: field (GF(2^n) arithmetic), polyops (polynomials and linearized
kernels), vbf (truth tables, differential/crooked analysis), spectral (Walsh
transforms), families (the two crooked constructions, Gold references,
parameter search), invariants (CCZ invariants and comparisons), cli.
"""

from .field import FieldCtx, field_create

__all__ = ["FieldCtx", "field_create"]
__version__ = "0.1.0"
