"""Direct five-point solver: null space, cubic constraints, degree-10 polynomial.

The pipeline is

1. ``build_qtilde``: one row per match with the products ``qp_i * q_j``.
2. ``null_basis``: Gauss-Jordan reduction to ``[I | A]`` gives the
   (non-orthonormal) basis ``[A^T | -I]``.
3. ``build_constraint_matrix``: the ten cubic constraints in ``(x, y, z)``
   as a 10x20 matrix (machine-generated arithmetic).
4. ``extract_action_poly``: eliminate down to ``C(z) [x y 1]^T = 0`` and
   ``d(z) = det C(z)``.
5. Sturm bracketing and polishing of the roots of ``d``, then
   ``back_substitute`` for each root.
"""

from __future__ import annotations

import numpy as np

from ..errors import DegenerateError
from ..geom import SQRT2, essential_constraint_violation
from ..poly import Polynomial, bracket_roots, eval_coeffs, poly_mul, poly_sub, polish_root, sturm_chain
from ._constraint_matrix import constraint_matrix
from .iterative import FIVEPOINT, Hypothesis, SolverConfig, _as_arrays

PIVOT_TOL = 1e-10

# Orthogonal recombination applied to the null-space basis before the
# constraint expansion.  For small rotations the diagonal of E is close to
# zero; without mixing the homogenizing coordinate is often one of those
# entries and the wanted root lands beyond z_max.
BASIS_MIX = 0.5 * np.array([
    [1.0, 1.0, 1.0, 1.0],
    [1.0, -1.0, 1.0, -1.0],
    [1.0, 1.0, -1.0, -1.0],
    [1.0, -1.0, -1.0, 1.0],
])

#: Column order of the constraint matrix.
MONOMIALS = (
    "x^3", "y^3", "x^2y", "xy^2", "x^2z", "x^2", "y^2z", "y^2", "xyz", "xy",
    "xz^2", "xz", "x", "yz^2", "yz", "y", "z^3", "z^2", "z", "1",
)


def monomial_vector(x: float, y: float, z: float) -> np.ndarray:
    return np.array([
        x**3, y**3, x * x * y, x * y * y, x * x * z, x * x, y * y * z, y * y,
        x * y * z, x * y, x * z * z, x * z, x, y * z * z, y * z, y, z**3, z * z, z, 1.0,
    ])


def build_qtilde(q, qp) -> np.ndarray:
    """Rows ``[qp1*q1, qp1*q2, qp1*q3, qp2*q1, ...]`` so that ``row @ E.ravel()`` is the residual."""
    q = np.atleast_2d(np.asarray(q, dtype=float))
    qp = np.atleast_2d(np.asarray(qp, dtype=float))
    return (qp[:, :, None] * q[:, None, :]).reshape(len(q), 9)


def null_basis(Qt) -> np.ndarray:
    """4x9 basis of the null space of a rank-5 ``5x9`` matrix.

    Gauss-Jordan with complete pivoting reduces the column-permuted matrix
    to ``[I | A]``; the rows of ``[A^T | -I]`` are then mapped back to the
    original column order.  The basis is not orthonormal.
    """
    A = np.array(Qt, dtype=float)
    m, n = A.shape
    if m >= n:
        raise DegenerateError("expected a wide matrix")
    scale = np.abs(A).max()
    if scale == 0.0:
        raise DegenerateError("zero data matrix")
    cols = np.arange(n)
    for k in range(m):
        sub = np.abs(A[k:, k:])
        i, j = np.unravel_index(np.argmax(sub), sub.shape)
        i += k
        j += k
        if A[i, j] < PIVOT_TOL * scale and -A[i, j] < PIVOT_TOL * scale:
            raise DegenerateError("data matrix is rank deficient")
        if i != k:
            A[[k, i]] = A[[i, k]]
        if j != k:
            A[:, [k, j]] = A[:, [j, k]]
            cols[[k, j]] = cols[[j, k]]
        A[k] /= A[k, k]
        others = np.arange(m) != k
        A[others] -= np.outer(A[others, k], A[k])
    basis_perm = np.hstack([A[:, m:].T, -np.eye(n - m)])
    basis = np.empty_like(basis_perm)
    basis[:, cols] = basis_perm
    return basis


def build_constraint_matrix(basis) -> np.ndarray:
    """10x20 matrix ``M`` with ``M @ monomial_vector(x, y, z) == 0`` for every
    essential matrix ``E = x*b0 + y*b1 + z*b2 + b3``.

    Row 0 is ``det E``; rows 1..9 the entries of ``2 E E^T E - tr(E E^T) E``
    in row-major order.
    """
    return constraint_matrix(basis)


def _gauss_jordan_left(M: np.ndarray) -> np.ndarray:
    """Reduce ``M`` to ``[I | B]`` over its first ``rows`` columns (partial pivoting)."""
    A = np.array(M, dtype=float)
    m = A.shape[0]
    scale = np.abs(A).max()
    for k in range(m):
        i = k + int(np.argmax(np.abs(A[k:, k])))
        if abs(A[i, k]) < PIVOT_TOL * scale:
            raise DegenerateError("constraint matrix is not reducible")
        if i != k:
            A[[k, i]] = A[[i, k]]
        A[k] /= A[k, k]
        others = np.arange(m) != k
        A[others] -= np.outer(A[others, k], A[k])
    return A[:, m:]


def _action_rows(B: np.ndarray, r1: int, r2: int):
    """Polynomials (ascending in z) multiplying ``x``, ``y`` and ``1`` in
    ``row[r1] - z * row[r2]`` of the reduced constraint matrix.

    The trailing ten columns are ``xz^2, xz, x, yz^2, yz, y, z^3, z^2, z, 1``.
    """
    a, b = B[r1], B[r2]
    px = [a[2], a[1] - b[2], a[0] - b[1], -b[0]]
    py = [a[5], a[4] - b[5], a[3] - b[4], -b[3]]
    p1 = [a[9], a[8] - b[9], a[7] - b[8], a[6] - b[7], -b[6]]
    return [px, py, p1]


def extract_action_poly(M):
    """Return ``(C, d)``.

    ``C`` is a 3x3 nested list of coefficient lists (ascending in z) with
    ``C(z) @ [x, y, 1] == 0`` at every solution; ``d = det C`` has degree 10.
    """
    B = _gauss_jordan_left(M)
    # Reduced rows 4..9 belong to x^2z, x^2, y^2z, y^2, xyz, xy.
    C = [_action_rows(B, 4, 5), _action_rows(B, 6, 7), _action_rows(B, 8, 9)]
    m0 = poly_sub(poly_mul(C[1][1], C[2][2]), poly_mul(C[1][2], C[2][1]))
    m1 = poly_sub(poly_mul(C[1][0], C[2][2]), poly_mul(C[1][2], C[2][0]))
    m2 = poly_sub(poly_mul(C[1][0], C[2][1]), poly_mul(C[1][1], C[2][0]))
    d = poly_mul(C[0][0], m0)
    d = poly_sub(d, poly_mul(C[0][1], m1))
    t = poly_mul(C[0][2], m2)
    d = [u + v for u, v in zip(d, t + [0.0] * (len(d) - len(t)))]
    return C, Polynomial(d)


def evaluate_action_matrix(C, z: float) -> np.ndarray:
    return np.array([[eval_coeffs(c, z) for c in row] for row in C])


def back_substitute(C, z: float, basis):
    """Essential matrix for root ``z``, or ``None`` when ``(x, y)`` is at infinity."""
    Cz = evaluate_action_matrix(C, z)
    pairs = (np.cross(Cz[0], Cz[1]), np.cross(Cz[0], Cz[2]), np.cross(Cz[1], Cz[2]))
    v = max(pairs, key=lambda p: p @ p)
    nv = np.linalg.norm(v)
    if nv == 0.0 or abs(v[2]) < 1e-10 * nv:
        return None
    x = v[0] / v[2]
    y = v[1] / v[2]
    e = x * basis[0] + y * basis[1] + z * basis[2] + basis[3]
    E = e.reshape(3, 3)
    return E * (SQRT2 / np.linalg.norm(E))


def five_point(q, qp, accept_tol: float = 1e-6, z_max: float = 100.0, max_iter: int = 10, check_tol: float = 1e-6):
    """All essential matrices (0 to 10) consistent with five matches.

    Returned matrices have Frobenius norm sqrt(2) and are validated against
    the cubic constraints and the epipolar constraint at ``check_tol``.
    """
    q = np.atleast_2d(np.asarray(q, dtype=float))
    qp = np.atleast_2d(np.asarray(qp, dtype=float))
    if len(q) != 5:
        raise ValueError(f"five_point needs exactly 5 matches, got {len(q)}")
    try:
        basis = BASIS_MIX @ null_basis(build_qtilde(q, qp))
        C, d = extract_action_poly(build_constraint_matrix(basis))
    except DegenerateError:
        return []
    if d.degree < 1:
        return []
    out = []
    for b in bracket_roots(sturm_chain(d), z_max):
        z = polish_root(d, b, max_iter, accept_tol)
        if z is None:
            continue
        E = back_substitute(C, z, basis)
        if E is None:
            continue
        det_v, trace_v = essential_constraint_violation(E)
        if det_v > check_tol or trace_v > check_tol:
            continue
        r = np.abs(np.sum(qp * (q @ E.T), axis=1))
        if np.any(r > check_tol * SQRT2):
            continue
        out.append(E)
    return out[:10]


def solve_five_point(matches, cfg=None) -> list:
    """:func:`five_point` wrapped as hypotheses, one per returned matrix."""
    cfg = cfg or SolverConfig()
    q, qp = _as_arrays(matches)
    out = []
    for E in five_point(q, qp, accept_tol=cfg.fivepoint_accept_tol, z_max=cfg.fivepoint_z_max):
        r = np.sum(qp * (q @ E.T), axis=1)
        out.append(Hypothesis(E, None, FIVEPOINT, 0, float(np.sqrt(np.mean(r * r)))))
    return out
