"""Parameter modes for the engine.

Everything downstream is parametrized either by the single Jack parameter
alpha (with beta an independent second parameter of the output algebra) or by
a root pair (zeta, eta) of alpha*x^2 + beta*x - 1, from which

    alpha = -1/(zeta*eta),      beta = 1/zeta + 1/eta.

The classical situation beta = 1 - alpha corresponds to (zeta, eta) =
(-1/alpha, 1).  Parameters are field elements, so fully symbolic, partially
symbolic and numeric modes are all expressed the same way.
"""

from __future__ import annotations

from .algebra import ALPHA, BETA, ETA, ONE, ZETA, FieldElem


class Mode:
    __slots__ = ("kind", "alpha", "beta", "zeta", "eta")

    def __init__(self, kind, alpha, beta, zeta=None, eta=None):
        self.kind = kind
        self.alpha = alpha
        self.beta = beta
        self.zeta = zeta
        self.eta = eta

    @staticmethod
    def symbolic():
        """alpha and beta free and independent; the default table mode."""
        return Mode("alpha", ALPHA, BETA)

    @staticmethod
    def alpha_mode(alpha=ALPHA, beta=None):
        """Fixed alpha (symbolic or numeric); beta defaults to 1 - alpha."""
        alpha = FieldElem.coerce(alpha)
        beta = ONE - alpha if beta is None else FieldElem.coerce(beta)
        return Mode("alpha", alpha, beta)

    @staticmethod
    def zeta_eta(zeta, eta):
        zeta = FieldElem.coerce(zeta)
        eta = FieldElem.coerce(eta)
        prod = zeta * eta
        if prod.is_zero():
            raise ValueError("zeta*eta must be nonzero")
        alpha = FieldElem.const(-1) / prod
        beta = ONE / zeta + ONE / eta
        return Mode("zeta_eta", alpha, beta, zeta, eta)

    @staticmethod
    def symbolic_zeta_eta():
        return Mode.zeta_eta(ZETA, ETA)

    def node_value(self, lam, i):
        """Coordinate x_i of the node added on row i of lam: the content of
        the new node in this mode's normalization (lam_i - (i-1)/alpha, or
        (i-1)*zeta + lam_i*eta)."""
        part = lam[i - 1] if i <= len(lam) else 0
        if self.kind == "alpha":
            return FieldElem.const(part) - FieldElem.const(i - 1) / self.alpha
        return FieldElem.const(i - 1) * self.zeta + FieldElem.const(part) * self.eta

    def key(self):
        """Hashable identity for memoization."""
        if self.kind == "alpha":
            return ("alpha", self.alpha.text(), self.beta.text())
        return ("zeta_eta", self.zeta.text(), self.eta.text())

    def ab_key(self):
        """Hashable identity of (alpha, beta) only (what the coefficient
        algebra depends on)."""
        return (self.alpha.text(), self.beta.text())

    def __repr__(self):
        if self.kind == "alpha":
            return f"Mode(alpha={self.alpha.pretty()}, beta={self.beta.pretty()})"
        return f"Mode(zeta={self.zeta.pretty()}, eta={self.eta.pretty()})"


SYMBOLIC = Mode.symbolic()
