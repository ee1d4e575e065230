"""GF(2) linear systems and Z4 quadratic phases for the Gauss-sum solver.

A phase is c + sum l_v x_v + 2 sum q_uv x_u x_v (mod 4) over 0/1 variables,
with q_uv in {0,1} (even cross terms). This class is closed under
substituting any variable by an XOR of other variables plus a constant, and
sums i^phase over all assignments evaluate by one-variable elimination with
multipliers 0, 2, or 1 +- i, staying inside Q(i).
"""

from __future__ import annotations

from .scalar import I, ONE, Scalar, ZERO

__all__ = ["LinearSystemGF2", "QuadraticPhase", "gauss_sum"]


class LinearSystemGF2:
    """Equations mask . x = rhs over GF(2), reduced with pivots chosen in
    ascending variable order (lowest set bit)."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.pivots: dict[int, tuple[int, int]] = {}  # var -> (mask, rhs)
        self.consistent = True

    def add(self, mask: int, rhs: int):
        while mask:
            low = mask & -mask
            var = low.bit_length() - 1
            if var in self.pivots:
                pmask, prhs = self.pivots[var]
                mask ^= pmask
                rhs ^= prhs
            else:
                self.pivots[var] = (mask, rhs)
                return
        if rhs:
            self.consistent = False

    def reduce(self):
        """Back-substitute to reduced row echelon form."""
        for var in sorted(self.pivots, reverse=True):
            pmask, prhs = self.pivots[var]
            for other, (omask, orhs) in list(self.pivots.items()):
                if other != var and (omask >> var) & 1:
                    self.pivots[other] = (omask ^ pmask, orhs ^ prhs)

    def free_vars(self):
        return [v for v in range(self.nvars) if v not in self.pivots]


class QuadraticPhase:
    def __init__(self):
        self.const = 0
        self.lin: dict[int, int] = {}
        self.cross: dict[tuple[int, int], int] = {}

    def add_const(self, c: int):
        self.const = (self.const + c) % 4

    def add_linear(self, v: int, c: int):
        c = (self.lin.get(v, 0) + c) % 4
        if c:
            self.lin[v] = c
        else:
            self.lin.pop(v, None)

    def add_cross(self, u: int, v: int, c: int):
        if u == v:
            # x^2 = x, and the cross slot carries a factor 2
            self.add_linear(u, 2 * (c % 2))
            return
        key = (u, v) if u < v else (v, u)
        c = (self.cross.get(key, 0) + c) % 2
        if c:
            self.cross[key] = c
        else:
            self.cross.pop(key, None)

    def add_scaled_parity(self, k: int, eps: int, others):
        """Add k * (eps xor XOR(others)) to the phase, k in Z4."""
        k %= 4
        if not k:
            return
        others = list(others)
        self.add_const(k * eps)
        coef = (k * (1 - 2 * eps)) % 4
        for v in others:
            self.add_linear(v, coef)
        for i in range(len(others)):
            for j in range(i + 1, len(others)):
                self.add_cross(others[i], others[j], k)

    def cross_partners(self, v: int):
        return [
            (a if b == v else b)
            for (a, b) in self.cross
            if a == v or b == v
        ]

    def remove_var(self, v: int):
        self.lin.pop(v, None)
        for key in [k for k in self.cross if v in k]:
            del self.cross[key]

    def substitute(self, v: int, eps: int, others):
        """Replace x_v := eps xor XOR(others); others must not contain v."""
        others = list(others)
        ell = self.lin.pop(v, 0)
        partners = self.cross_partners(v)
        for key in [k for k in self.cross if v in k]:
            del self.cross[key]
        if ell:
            self.add_scaled_parity(ell, eps, others)
        for a in partners:
            # 2 x_a (eps xor parity) == 2 x_a (eps + sum others) mod 4
            self.add_linear(a, 2 * eps)
            for k in others:
                self.add_cross(a, k, 1)


_ONE_PLUS_I = ONE + I
_ONE_MINUS_I = ONE - I
_I_POW = (ONE, I, Scalar(-1), Scalar(0, -1))


def gauss_sum(phase: QuadraticPhase, variables) -> Scalar:
    """Sum of i^phase over all 0/1 assignments of the given variables."""
    live = set(variables)
    multiplier = ONE
    while live:
        v = min(live)
        live.discard(v)
        ell = phase.lin.pop(v, 0)
        partners = phase.cross_partners(v)
        phase.remove_var(v)
        if ell % 2:
            multiplier = multiplier * (_ONE_PLUS_I if ell == 1 else _ONE_MINUS_I)
            phase.add_scaled_parity(3 if ell == 1 else 1, 0, partners)
        else:
            want = 0 if ell == 0 else 1
            if not partners:
                if want:
                    return ZERO
                multiplier = multiplier * 2
            else:
                multiplier = multiplier * 2
                k0 = min(partners)
                rest = [p for p in partners if p != k0]
                live.discard(k0)
                phase.substitute(k0, want, rest)
    return multiplier * _I_POW[phase.const % 4]
