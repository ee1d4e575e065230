"""The interpolation lemma: exponent lattices of (alpha, beta) over Q(i),
coset-grouped Vandermonde solving, and rational sign-change certificates for
the off-diagonal root cases.

compute_lattice is an exact decision procedure via Gaussian-prime
factorization: alpha^j beta^k = 1 iff every prime valuation combination
vanishes and the combined unit exponent is 0 mod 4. Inputs carrying sqrt2
are rejected rather than approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .gaussint import gaussian_valuations
from .rational import Q
from .scalar import GaussianRational, ONE, Scalar, ZERO

__all__ = [
    "ExponentLattice",
    "InterpolationInstance",
    "InterpolationError",
    "LatticeError",
    "compute_lattice",
    "gaussian_from_scalar",
    "interpolation_solve",
    "make_observations",
    "cone_points",
    "sign_change_certificate",
    "offdiagonal_root_certificate",
]


class LatticeError(ValueError):
    pass


class InterpolationError(ValueError):
    pass


@dataclass(frozen=True)
class ExponentLattice:
    """L = {(j,k): alpha^j beta^k = 1}. rank 0: trivial; rank 1: all integer
    multiples of `generator` (minimal, sign-normalized); rank 2: spanned by
    `basis`."""

    rank: int
    generator: tuple[int, int] | None = None
    basis: tuple[tuple[int, int], tuple[int, int]] | None = None

    def contains(self, j: int, k: int) -> bool:
        if self.rank == 0:
            return (j, k) == (0, 0)
        if self.rank == 1:
            s, t = self.generator
            if s:
                return j % s == 0 and k == (j // s) * t
            return j == 0 and t != 0 and k % t == 0
        (a, b), (c, d) = self.basis
        det = a * d - b * c
        pj, pk = d * j - c * k, -b * j + a * k
        return pj % det == 0 and pk % det == 0


def gaussian_from_scalar(s: Scalar) -> GaussianRational:
    if not s.is_gaussian():
        raise LatticeError(
            "lattice undetermined over this field: value has a sqrt2 part"
        )
    return s.g0


def _hnf_basis(gens):
    """Hermite-style basis ((a,b),(0,d)) of the 2D lattice generated by gens."""
    vecs = [tuple(v) for v in gens if tuple(v) != (0, 0)]
    # Euclid on first coordinates
    while True:
        nz = [v for v in vecs if v[0]]
        if len(nz) <= 1:
            break
        nz.sort(key=lambda v: abs(v[0]))
        a, rest = nz[0], nz[1:]
        new = [v for v in vecs if not v[0]]
        new.append(a)
        for v in rest:
            qk = v[0] // a[0]
            w = (v[0] - qk * a[0], v[1] - qk * a[1])
            if w != (0, 0):
                new.append(w)
        vecs = new
    first = next((v for v in vecs if v[0]), None)
    seconds = [abs(v[1]) for v in vecs if not v[0] and v[1]]
    d = gcd(*seconds) if len(seconds) > 1 else (seconds[0] if seconds else 0)
    if first is None:
        return ((0, d), (0, 0)) if d else ((0, 0), (0, 0))
    if first[0] < 0:
        first = (-first[0], -first[1])
    if d:
        first = (first[0], first[1] % d)
        return (first, (0, d))
    return (first, (0, 0))


def compute_lattice(alpha: GaussianRational, beta: GaussianRational) -> ExponentLattice:
    if not alpha or not beta:
        raise LatticeError("lattice needs nonzero alpha and beta")
    ua, va = gaussian_valuations(alpha)
    ub, vb = gaussian_valuations(beta)
    primes = sorted(set(va) | set(vb))
    if not primes:
        # both units: kernel of (j,k) -> j*ua + k*ub mod 4, a rank-2 lattice
        gens = [(4, 0), (0, 4)]
        for j in range(4):
            for k in range(4):
                if (j or k) and (j * ua + k * ub) % 4 == 0:
                    gens.append((j, k))
        b1, b2 = _hnf_basis(gens)
        return ExponentLattice(2, basis=(b1, b2))
    p0 = primes[0]
    a0, b0 = va.get(p0, 0), vb.get(p0, 0)
    g = gcd(a0, b0)
    s0, t0 = b0 // g, -a0 // g
    for p in primes[1:]:
        if s0 * va.get(p, 0) + t0 * vb.get(p, 0) != 0:
            return ExponentLattice(0)
    w = (s0 * ua + t0 * ub) % 4
    d = 1 if w == 0 else 4 // gcd(w, 4)
    s, t = d * s0, d * t0
    if s < 0 or (s == 0 and t < 0):
        s, t = -s, -t
    return ExponentLattice(1, generator=(s, t))


@dataclass(frozen=True)
class InterpolationInstance:
    alpha: GaussianRational
    beta: GaussianRational
    m: int
    n_values: tuple[Scalar, ...]


def cone_points(m: int):
    return [(j, k) for j in range(m + 1) for k in range(m + 1 - j)]


def make_observations(
    alpha: GaussianRational, beta: GaussianRational, m: int, x: dict
) -> tuple[Scalar, ...]:
    """Synthesize N_l = sum (alpha^j beta^k)^l x_{j,k} for l = 1..C(m+2,2)."""
    pts = cone_points(m)
    count = (m + 2) * (m + 1) // 2
    out = []
    for ell in range(1, count + 1):
        acc = ZERO
        for j, k in pts:
            xv = x.get((j, k))
            if xv is None or not xv:
                continue
            acc = acc + Scalar.from_gaussian((alpha**j * beta**k) ** ell) * xv
        out.append(acc)
    return tuple(out)


def _solve_linear(A, b):
    """Exact Gaussian elimination; A square and invertible."""
    n = len(A)
    M = [list(row) + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise InterpolationError("singular interpolation system")
        M[col], M[piv] = M[piv], M[col]
        inv = M[col][col].inverse()
        M[col] = [e * inv for e in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                factor = M[r][col]
                M[r] = [e - factor * p for e, p in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def interpolation_solve(
    inst: InterpolationInstance, phi: Scalar, psi: Scalar
) -> Scalar:
    """Recover sum phi^j psi^k x_{j,k} from the N_l observations."""
    lattice = compute_lattice(inst.alpha, inst.beta)
    if lattice.rank == 2:
        raise InterpolationError(
            "rank-2 lattice (both roots of unity) is outside the lemma"
        )
    pts = cone_points(inst.m)
    count = len(pts)
    if len(inst.n_values) != count:
        raise InterpolationError(
            f"need {count} observations, got {len(inst.n_values)}"
        )
    if lattice.rank == 1:
        s, t = lattice.generator
        check = (phi**s if s >= 0 else phi.inverse() ** (-s)) * (
            psi**t if t >= 0 else psi.inverse() ** (-t)
        )
        if check != ONE:
            raise InterpolationError("phi^s psi^t != 1 for the lattice generator")

    groups: list[list[tuple[int, int]]] = []
    for pt in pts:
        for grp in groups:
            dj, dk = pt[0] - grp[0][0], pt[1] - grp[0][1]
            if lattice.contains(dj, dk):
                grp.append(pt)
                break
        else:
            groups.append([pt])

    nodes = []
    for grp in groups:
        j, k = grp[0]
        nodes.append(Scalar.from_gaussian(inst.alpha**j * inst.beta**k))
    if len(set(nodes)) != len(nodes):
        raise AssertionError("coset nodes must be distinct")

    K = len(groups)
    A = [[node ** (ell + 1) for node in nodes] for ell in range(K)]
    coset_sums = _solve_linear(A, list(inst.n_values[:K]))

    total = ZERO
    for grp, xhat in zip(groups, coset_sums):
        j, k = grp[0]
        weight = phi**j * psi**k
        for j2, k2 in grp[1:]:
            if phi**j2 * psi**k2 != weight:
                raise InterpolationError("phi/psi not constant on a coset")
        total = total + weight * xhat
    return total


# ------------------------------------------------ root-existence checks


def sign_change_certificate(fn, lo, hi, refinements: int = 20):
    """Exact-rational bisection bracket for a root of fn on [lo, hi].

    fn maps rationals to rationals exactly; requires a sign change on the
    endpoints. Returns (lo', hi') with fn(lo')*fn(hi') <= 0 and width
    (hi-lo)/2^refinements.
    """
    lo, hi = Q(lo), Q(hi)
    flo, fhi = fn(lo), fn(hi)
    if flo * fhi > 0:
        raise ValueError("no sign change on the given interval")
    for _ in range(refinements):
        mid = (lo + hi) / 2
        fmid = fn(mid)
        if flo * fmid <= 0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return lo, hi


def offdiagonal_root_certificate(s: int, t: int):
    """Existence bracket for the root the rank-1 off-diagonal cases need.

    t > 0, s >= 0: psi0 in (0,1] with (psi+2)^s psi^t = 1.
    t > 0, s < 0, |t| > |s|: psi0 in (1, inf) with psi^|t| = (psi+2)^|s|.
    t > 0, s < 0, |t| < |s|: phi0 in (1, inf) with phi^|s| = (phi+2)^|t|.
    """
    if t <= 0:
        raise ValueError("these cases have t > 0")
    if s >= 0:
        fn = lambda q: (q + 2) ** s * q**t - 1
        lo, hi = Q(1, 1 << 8), Q(1)
        label = "psi in (0,1]"
    elif t > -s:
        fn = lambda q: q**t - (q + 2) ** (-s)
        lo, hi, label = Q(1), None, "psi in (1,inf)"
    elif t < -s:
        fn = lambda q: q ** (-s) - (q + 2) ** t
        lo, hi, label = Q(1), None, "phi in (1,inf)"
    else:
        raise ValueError("|s| = |t| with s < 0 < t has no off-diagonal root")
    if hi is None:
        hi = Q(2)
        while fn(hi) < 0:
            hi *= 2
    bracket = sign_change_certificate(fn, lo, hi)
    return {"case": label, "bracket": bracket, "values": (fn(bracket[0]), fn(bracket[1]))}
