"""Index maps for short exact sequences of involutive function algebras.

Odd-class inputs produce the self-adjoint unitary built from a symmetric
contraction lift, conjugated into the standard basepoint frame; even-class
inputs produce -exp(i*pi*lift).  The result vanishes on the closed set in
the unitized sense: its values there equal the neutral stack exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import numpy as np

from . import matcore
from .basespace import (Algebra, FnElement, SESDescriptor, apply_full_involution,
                        extend_contraction, ideal_base, restrict, scalar_algebra)
from .symclass import (KOClassRep, MembershipError, class_spec, class_structure,
                       neutral, require_membership)

TARGET = {1: 0, -1: 6, 5: 4, 3: 2, 2: 1, 0: -1, 6: 5, 4: 3,
          "KU1": "KU0", "KU0": "KU1"}

_EVEN = (0, 2, 4, 6, "KU0")


def symmetrize_lift(a: FnElement, i, algebra: Algebra = None) -> FnElement:
    """Project a lift onto the class-i lift relation.

    Odd classes: y = (x + x^{tau(*)})/2 so y inherits the unitary's
    symmetry.  Even classes: hermitize, then take the tau-(anti)symmetric
    part.  Fixed points of the rule are unchanged.
    """
    algebra = algebra or scalar_algebra(a.base)
    spec = class_spec(i)
    if spec["sign"] is None:
        # complex classes: hermitize only (KU0), nothing for KU1
        if i == "KU0":
            return FnElement(a.base, (a.values + np.conj(np.swapaxes(a.values, 1, 2))) / 2)
        return a.copy()
    s = class_structure(i, a.dim, algebra)
    if i in (1, -1, 3, 5):
        t = apply_full_involution(a, s)
        if spec["star"]:
            t = t.adjoint()
        return FnElement(a.base, (a.values + t.values) / 2.0)
    h = FnElement(a.base, (a.values + np.conj(np.swapaxes(a.values, 1, 2))) / 2.0)
    t = apply_full_involution(h, s)
    want_sign = 1.0 if i in (0, 4) else -1.0
    return FnElement(a.base, (h.values + want_sign * t.values) / 2.0)


def retract_contraction(y: FnElement, mode: str, tol: float = 1e-9) -> FnElement:
    """Pull a symmetric lift into the unit ball.

    odd mode: a = y f(y*y) with f(t) = min(1/sqrt(t), 1), preserving every
    one-sided symmetry of y.  even mode: clamp the spectrum of a Hermitian
    lift to [-1, 1].
    """
    if mode == "even":
        out = np.array([matcore.clamp_spectrum(v, -1.0, 1.0, tol=1e-6)
                        for v in y.values])
        return FnElement(y.base, out)
    if mode != "odd":
        raise ValueError("mode must be 'odd' or 'even'")
    out = np.empty_like(y.values)
    for p in range(y.base.npoints):
        v = y.values[p]
        w, frame = np.linalg.eigh(v.conj().T @ v)
        f = np.minimum(1.0 / np.sqrt(np.maximum(w, 1e-300)), 1.0)
        out[p] = v @ ((frame * f) @ frame.conj().T)
    return FnElement(y.base, out)


def _index_values(vals: np.ndarray) -> np.ndarray:
    n = vals.shape[1]
    out = np.empty((vals.shape[0], 2 * n, 2 * n), dtype=complex)
    eye = np.eye(n)
    for p in range(vals.shape[0]):
        a = vals[p]
        left = matcore.psd_sqrt(eye - a.conj().T @ a, tol=1e-7, zero_snap=1e-12)
        right = matcore.psd_sqrt(eye - a @ a.conj().T, tol=1e-7, zero_snap=1e-12)
        out[p, :n, :n] = 2.0 * a @ a.conj().T - eye
        out[p, :n, n:] = 2.0 * a @ left
        out[p, n:, :n] = 2.0 * a.conj().T @ right
        out[p, n:, n:] = eye - 2.0 * a.conj().T @ a
    return out


def index_unitary(a: FnElement) -> FnElement:
    """The self-adjoint unitary [[2aa*-1, 2a sqrt(1-a*a)],
    [2a* sqrt(1-aa*), 1-2a*a]] of a pointwise contraction."""
    norms = np.linalg.norm(a.values, ord=2, axis=(1, 2))
    if np.max(norms) > 1.0 + 1e-7:
        raise ValueError(f"lift is not a contraction (norm {np.max(norms):.6f})")
    return FnElement(a.base, _index_values(a.values))


def index_unitary_matrix(a: np.ndarray) -> np.ndarray:
    return _index_values(np.asarray(a, dtype=complex)[None])[0]


def exp_unitary(a: FnElement, tol: float = 1e-7) -> FnElement:
    """-exp(i*pi*a) pointwise; respects direct sums exactly."""
    out = np.array([matcore.neg_exp_pi_i(v, tol=tol) for v in a.values])
    return FnElement(a.base, out)


def boundary_conjugator(i, dim: int) -> np.ndarray:
    """Constant frame rotation moving the odd-case result onto the neutral
    basepoint stack of the target class."""
    if i == 1 or i == "KU1":
        return matcore.conjugator_v(dim // 2)
    if i == -1:
        return matcore.conjugator_v(dim // 2) @ matcore.conjugator_w(dim // 2)
    if i == 5:
        return matcore.conjugator_x(dim // 4)
    if i == 3:
        return (matcore.conjugator_v(dim // 2) @ matcore.conjugator_q(dim // 4)
                @ matcore.conjugator_w(dim // 2))
    raise ValueError(f"no odd-case conjugator for class {i!r}")


@dataclass
class BoundaryResult:
    rep: KOClassRep
    lift: FnElement
    residuals: dict = field(default_factory=dict)

    @property
    def element(self) -> FnElement:
        return self.rep.element


def boundary_map(u: FnElement, i, ses: SESDescriptor,
                 lift_strategy: str = "natural", algebra: Algebra = None,
                 tol: float = 1e-9) -> BoundaryResult:
    """Index map of class i for the given short exact sequence.

    The input lives over the quotient space and must pass class-i
    membership there; the output is a checked class-(i-1) representative
    over the ideal, with neutral values on the closed set.
    """
    if algebra is not None and algebra.dim_alg != 1:
        raise MembershipError("grid boundary maps support scalar algebras only")
    quot_alg = scalar_algebra(ses.quotient)
    require_membership(u, i, quot_alg, tol)
    if u.base != ses.quotient:
        raise MembershipError("input does not live over the SES quotient")

    ext = extend_contraction(u, ses, lift_strategy)
    total_alg = scalar_algebra(ses.total)
    sym = symmetrize_lift(ext, i, total_alg)
    mode = "even" if i in _EVEN else "odd"
    lift = retract_contraction(sym, mode)

    back = restrict(lift, ses)
    lift_residual = float(np.max(np.abs(back.values - u.values)))
    if lift_residual > 1e-7:
        raise MembershipError(
            f"symmetrized lift no longer restricts to the input ({lift_residual:.2e})")

    if mode == "odd":
        b = index_unitary(lift)
        y = boundary_conjugator(i, b.dim)
        vals = y @ b.values @ y.conj().T
    else:
        vals = exp_unitary(lift).values

    j = TARGET[i]
    ibase = ideal_base(ses)
    result = FnElement(ibase, vals)
    out_alg = Algebra(ibase)
    rep = require_membership(result, j, out_alg, tol)

    spec = class_spec(j)
    target = np.kron(np.eye(result.dim // spec["mult"], dtype=complex),
                     spec["neutral"])
    lam_res = max(float(np.linalg.norm(result.values[p] - target))
                  for p in ibase.pinned)
    if lam_res > tol:
        raise MembershipError(f"result basepoint values miss the neutral stack "
                              f"({lam_res:.2e})")
    res = dict(rep.residuals)
    res["lift_restriction"] = lift_residual
    res["lambda_neutral"] = lam_res
    return BoundaryResult(rep, lift, res)
