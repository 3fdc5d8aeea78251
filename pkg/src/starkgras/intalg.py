"""Exact integer / modular algebra kernel.

Everything here is exact: integer matrices with Smith normal form, lattice
indices, finite abelian groups with their character duals, coefficient rings
Z/p^m and their unramified extensions (Galois rings), and group-ring
elements carrying idempotents and derivative operators.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

INFINITE = "INFINITE"


class AlgebraError(ValueError):
    code = "ALGEBRA_ERROR"

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code


# ---------------------------------------------------------------------------
# elementary number theory


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for 64-bit-ish inputs, safe far beyond our caps
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(n + 1) if sieve[i]]


def factorize(n: int) -> dict[int, int]:
    if n <= 0:
        raise AlgebraError("BAD_ARGUMENT", f"factorize needs n > 0, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise AlgebraError("BAD_ARGUMENT", "valuation of 0")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def primitive_root(q: int) -> int:
    """Smallest primitive root modulo q, for q an odd prime power or 2, 4."""
    if q in (2, 4):
        return q - 1
    fac = factorize(q)
    if len(fac) != 1 or 2 in fac:
        raise AlgebraError("BAD_ARGUMENT", f"no primitive root mod {q}")
    p = next(iter(fac))
    phi = q // p * (p - 1)
    qs = list(factorize(phi))
    for g in range(2, q):
        if g % p == 0:
            continue
        if all(pow(g, phi // r, q) != 1 for r in qs):
            return g
    raise AlgebraError("INTERNAL", f"primitive root search failed for {q}")


def crt(residues, moduli) -> int:
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        g = math.gcd(m, n)
        if (r - x) % g:
            raise AlgebraError("BAD_ARGUMENT", "inconsistent CRT system")
        lcm = m // g * n
        t = ((r - x) // g * pow(m // g, -1, n // g)) % (n // g)
        x = (x + m * t) % lcm
        m = lcm
    return x


# ---------------------------------------------------------------------------
# integer matrices and Smith normal form


def mat_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    Oi[j] += a * Bt[j]
    return out


def mat_transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def _snf_in_place(M, U, V):
    rows, cols = len(M), len(M[0]) if M else 0
    s = 0
    while s < min(rows, cols):
        # minimal absolute value pivot keeps intermediate entries small
        piv = None
        best = None
        for i in range(s, rows):
            Mi = M[i]
            for j in range(s, cols):
                v = Mi[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        i0, j0 = piv
        if i0 != s:
            M[s], M[i0] = M[i0], M[s]
            U[s], U[i0] = U[i0], U[s]
        if j0 != s:
            for row in M:
                row[s], row[j0] = row[j0], row[s]
            for row in V:
                row[s], row[j0] = row[j0], row[s]
        clean = False
        while not clean:
            clean = True
            for i in range(s + 1, rows):
                if M[i][s]:
                    q = M[i][s] // M[s][s]
                    if q:
                        Ms, Mi, Us, Ui = M[s], M[i], U[s], U[i]
                        for j in range(cols):
                            Mi[j] -= q * Ms[j]
                        for j in range(len(Ui)):
                            Ui[j] -= q * Us[j]
                    if M[i][s]:
                        M[s], M[i] = M[i], M[s]
                        U[s], U[i] = U[i], U[s]
                        clean = False
            for j in range(s + 1, cols):
                if M[s][j]:
                    q = M[s][j] // M[s][s]
                    if q:
                        for row in M:
                            row[j] -= q * row[s]
                        for row in V:
                            row[j] -= q * row[s]
                    if M[s][j]:
                        for row in M:
                            row[s], row[j] = row[j], row[s]
                        for row in V:
                            row[s], row[j] = row[j], row[s]
                        clean = False
        if M[s][s] < 0:
            for j in range(cols):
                M[s][j] = -M[s][j]
            for j in range(len(U[s])):
                U[s][j] = -U[s][j]
        s += 1
    # enforce the divisibility chain
    k = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a, b = M[i][i], M[i + 1][i + 1]
            if a and b and b % a:
                # fold entry b into position i via one row+col cycle
                for j in range(len(U[i])):
                    U[i][j] += U[i + 1][j]
                M[i][i + 1] = b
                g, x, y = _xgcd(a, b)
                # column ops: col_i' = x*col_i + y*col_{i+1}; col_{i+1}' balanced
                for row in (M, V):
                    for r in row:
                        ci, cj = r[i], r[i + 1]
                        r[i] = x * ci + y * cj
                        r[i + 1] = (-(b // g)) * ci + (a // g) * cj
                M[i][i], M[i][i + 1] = g, 0
                M[i + 1][i], M[i + 1][i + 1] = 0, a * b // g
                _clear_cross(M, U, V, i)
                changed = True
            elif a == 0 and b != 0:
                M[i][i], M[i + 1][i + 1] = b, 0
                U[i], U[i + 1] = U[i + 1], U[i]
                for row in (M, V):
                    for r in row:
                        r[i], r[i + 1] = r[i + 1], r[i]
                changed = True


def _clear_cross(M, U, V, s):
    # after a 2x2 block fix, re-eliminate any residue in row/col s, s+1
    rows, cols = len(M), len(M[0])
    for i in range(rows):
        for j in range(cols):
            if i != j and M[i][j]:
                sub = [row[:] for row in M]
                # fall back to a local re-run; rare path, matrices are small
                _snf_in_place(M, U, V)
                return


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def smith_normal_form(A: list[list[int]]):
    """Return (D, U, V) with U*A*V = D, D diagonal with d_i | d_{i+1}."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(map(int, row)) for row in A]
    U = mat_identity(rows)
    V = mat_identity(cols)
    if rows and cols:
        _snf_in_place(M, U, V)
    return M, U, V


def snf_diagonal(A) -> list[int]:
    D, _, _ = smith_normal_form(A)
    k = min(len(D), len(D[0]) if D else 0)
    return [D[i][i] for i in range(k)]


def check_snf(A, D, U, V) -> bool:
    if mat_mul(mat_mul(U, A), V) != D:
        return False
    k = min(len(D), len(D[0]) if D else 0)
    diag = [D[i][i] for i in range(k)]
    for i in range(len(D)):
        for j in range(len(D[0]) if D else 0):
            if i != j and D[i][j]:
                return False
    for i in range(k - 1):
        if diag[i + 1] and diag[i] == 0:
            return False
        if diag[i] and diag[i + 1] % diag[i]:
            return False
    return abs(_det_unimodular(U)) == 1 and abs(_det_unimodular(V)) == 1


def _det_unimodular(A) -> int:
    # fraction-free Bareiss determinant
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def det(A) -> int:
    return _det_unimodular(A)


def lattice_index(ambient_rank: int, generators: list[list[int]]):
    """Index of the span of `generators` in Z^n; INFINITE if rank deficient."""
    n = ambient_rank
    if any(len(g) != n for g in generators):
        raise AlgebraError("BAD_ARGUMENT", "generator has wrong length")
    if not generators:
        return INFINITE if n > 0 else 1
    diag = snf_diagonal(generators)
    nonzero = [d for d in diag if d]
    if len(nonzero) < n:
        return INFINITE
    idx = 1
    for d in nonzero:
        idx *= abs(d)
    return idx


def kernel_basis_mod(A: list[list[int]], n: int) -> list[list[int]]:
    """Basis of {x : A x = 0 mod n}, x over Z/n, A with k rows, c cols."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    # solve over Z: kernel of [A ; nI] acting on (x, y) -> A x + n y
    stacked = [[A[i][j] for i in range(rows)] for j in range(cols)]
    # columns = relations; work with x in Z^cols s.t. A x ≡ 0 (n)
    M = [row[:] for row in A] + [[n if i == j else 0 for j in range(cols)] for i in range(cols)]
    # x in Z^cols with M^T ... simpler: Smith of A^T? use: solutions of A x ≡ 0 (n)
    At = mat_transpose(A) if rows else []
    D, U, V = smith_normal_form(A) if rows else ([], [], mat_identity(cols))
    out = []
    k = min(rows, cols)
    for j in range(cols):
        d = D[j][j] if j < k else 0
        if d == 0:
            g = 1  # free column: x = V e_j works for any multiple
            vec = [V[i][j] % n for i in range(cols)]
            if any(vec):
                out.append(vec)
        else:
            g = n // math.gcd(n, d)
            if g % n:
                vec = [(g * V[i][j]) % n for i in range(cols)]
                if any(vec):
                    out.append(vec)
    return out


# ---------------------------------------------------------------------------
# coefficient rings: Q, Z/n, and Galois rings GR(p^m, d)


class RationalRing:
    """Exact rationals, the characteristic-zero coefficient mode."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return a == 0

    def inv(self, a):
        if a == 0:
            raise AlgebraError("NON_INVERTIBLE", "division by zero")
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("QQ")


QQ = RationalRing()


class ZModRing:
    """Z/n with n = p^m in the idempotent paths; any n for plain SNF work."""

    def __init__(self, n: int):
        if n < 2:
            raise AlgebraError("BAD_ARGUMENT", f"modulus {n} < 2")
        self.n = n
        self.zero = 0
        self.one = 1 % n

    def coerce(self, x):
        return int(x) % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def eq(self, a, b):
        return (a - b) % self.n == 0

    def is_zero(self, a):
        return a % self.n == 0

    def is_unit(self, a):
        return math.gcd(a, self.n) == 1

    def inv(self, a):
        try:
            return pow(a, -1, self.n)
        except ValueError:
            raise AlgebraError("NON_INVERTIBLE", f"{a} not invertible mod {self.n}")

    def __repr__(self):
        return f"Z/{self.n}"

    def __eq__(self, other):
        return isinstance(other, ZModRing) and self.n == other.n

    def __hash__(self):
        return hash(("ZMod", self.n))


def _poly_mod_mul(a, b, h, n):
    d = len(h) - 1
    out = [0] * (2 * d - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % n
    for k in range(2 * d - 2, d - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for t in range(d):
                out[k - d + t] = (out[k - d + t] - c * h[t]) % n
    return tuple(out[:d])


class GaloisRing:
    """GR(p^m, d) = (Z/p^m)[x]/(h), h a monic lift of an irreducible mod p.

    Elements are length-d tuples of ints mod p^m. Contains roots of unity of
    every order dividing p^d - 1, which is how characters of prime-to-p order
    not dividing p - 1 get realized at precision m.
    """

    def __init__(self, p: int, m: int, h: tuple[int, ...]):
        self.p = p
        self.m = m
        self.n = p**m
        self.h = tuple(c % self.n for c in h)  # monic: h[-1] == 1
        assert self.h[-1] == 1
        self.d = len(h) - 1
        self.zero = tuple([0] * self.d)
        self.one = tuple([1] + [0] * (self.d - 1))

    @staticmethod
    def make(p: int, m: int, d: int) -> "GaloisRing":
        """Construct with h = a monic degree-d irreducible mod p, lifted."""
        if d == 1:
            return GaloisRing(p, m, (0, 1))
        # find irreducible by testing x^d + ... candidates for rootless
        # irreducibility via x^(p^d) == x and x^(p^e) != x for e | d, e < d
        for tail in itertools.product(range(p), repeat=d):
            h = tuple(list(tail) + [1])
            if _is_irreducible_mod_p(h, p):
                return GaloisRing(p, m, h)
        raise AlgebraError("INTERNAL", "no irreducible polynomial found")

    def coerce(self, x):
        if isinstance(x, tuple):
            return tuple(c % self.n for c in x)
        return tuple([int(x) % self.n] + [0] * (self.d - 1))

    def add(self, a, b):
        return tuple((x + y) % self.n for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.n for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.n for x in a)

    def mul(self, a, b):
        return _poly_mod_mul(a, b, self.h, self.n)

    def eq(self, a, b):
        return all((x - y) % self.n == 0 for x, y in zip(a, b))

    def is_zero(self, a):
        return all(x % self.n == 0 for x in a)

    def is_unit(self, a):
        return not all(x % self.p == 0 for x in a)

    def pow(self, a, e):
        r = self.one
        b = a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def inv(self, a):
        if not self.is_unit(a):
            raise AlgebraError("NON_INVERTIBLE", "non-unit in Galois ring")
        # unit group has order p^((m-1)d) * (p^d - 1)
        order = self.p ** ((self.m - 1) * self.d) * (self.p**self.d - 1)
        return self.pow(a, order - 1)

    def root_of_unity(self, k: int):
        """An element of exact multiplicative order k (k | p^d - 1)."""
        if (self.p**self.d - 1) % k:
            raise AlgebraError(
                "UNREALIZABLE_CHARACTER",
                f"order {k} does not divide {self.p}^{self.d} - 1",
            )
        q = self.p**self.d - 1
        # find a generator of the Teichmueller part, then power down
        for trial in self._elements_mod_p():
            if self.is_zero(trial):
                continue
            # Teichmueller lift: iterate x -> x^(p^d) to converge mod p^m
            x = trial
            for _ in range(self.m + 1):
                x = self.pow(x, self.p**self.d)
            cand = self.pow(x, q // k)
            if self._mult_order_divides_properly(cand, k):
                return cand
        raise AlgebraError("INTERNAL", "no root of unity found")

    def _mult_order_divides_properly(self, x, k):
        if not self.eq(self.pow(x, k), self.one):
            return False
        for r in factorize(k):
            if self.eq(self.pow(x, k // r), self.one):
                return False
        return True

    def _elements_mod_p(self):
        for tup in itertools.product(range(self.p), repeat=self.d):
            yield tuple(tup)

    def __repr__(self):
        return f"GR({self.p}^{self.m},{self.d})"

    def __eq__(self, other):
        return (
            isinstance(other, GaloisRing)
            and (self.p, self.m, self.h) == (other.p, other.m, other.h)
        )

    def __hash__(self):
        return hash(("GR", self.p, self.m, self.h))


def _is_irreducible_mod_p(h, p):
    d = len(h) - 1
    # x^(p^e) mod h for e = 1..d; irreducible iff x^(p^d) == x and
    # gcd-style distinctness at proper divisors
    def powmod_frob(e):
        x = (0, 1) + (0,) * (d - 2) if d >= 2 else (0,)
        out = x
        for _ in range(e):
            out = _poly_pow_mod(out, p, h, p)
        return out

    xd = powmod_frob(d)
    x = tuple([0, 1] + [0] * (d - 2))
    if xd != x:
        return False
    for e in factorize(d):
        if powmod_frob(d // e) == x:
            return False
    return True


def _poly_pow_mod(a, e, h, n):
    r = tuple([1] + [0] * (len(h) - 2))
    b = a
    while e:
        if e & 1:
            r = _poly_mod_mul(r, b, h, n)
        b = _poly_mod_mul(b, b, h, n)
        e >>= 1
    return r


def character_ring(p: int, m: int, order: int):
    """Smallest coefficient ring mod p^m containing roots of unity of `order`."""
    if order % p == 0:
        raise AlgebraError("NON_INVERTIBLE_ORDER", f"p={p} divides order {order}")
    d = 1
    while (p**d - 1) % order:
        d += 1
    if d == 1:
        return ZModRing(p**m)
    return GaloisRing.make(p, m, d)


def root_of_unity_mod(ring, k: int):
    """Element of multiplicative order k in ZModRing(p^m) or GaloisRing."""
    if isinstance(ring, GaloisRing):
        return ring.root_of_unity(k)
    n = ring.n
    fac = factorize(n)
    if len(fac) != 1:
        raise AlgebraError("BAD_ARGUMENT", "need a prime-power modulus")
    p = next(iter(fac))
    if (p - 1) % k:
        raise AlgebraError(
            "UNREALIZABLE_CHARACTER", f"order {k} does not divide {p} - 1"
        )
    g = primitive_root(n) if n > 2 else 1
    phi = n // p * (p - 1)
    return pow(g, phi // k, n)


# ---------------------------------------------------------------------------
# finite abelian groups and characters


class FiniteAbelianGroup:
    """Product of cyclic groups Z/d_1 x ... x Z/d_k with d_i | d_{i+1}."""

    def __init__(self, invariant_factors):
        facs = [int(d) for d in invariant_factors if int(d) != 1]
        for a, b in zip(facs, facs[1:]):
            if b % a:
                raise AlgebraError("BAD_ARGUMENT", "invariant factors must divide")
        self.invariant_factors = tuple(facs)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors) if self.invariant_factors else 1

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def identity(self):
        return tuple([0] * len(self.invariant_factors))

    def elements(self):
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def op(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.invariant_factors))

    def inverse(self, a):
        return tuple((-x) % d for x, d in zip(a, self.invariant_factors))

    def element_order(self, a) -> int:
        o = 1
        for x, d in zip(a, self.invariant_factors):
            o = math.lcm(o, d // math.gcd(x, d))
        return o

    def generators(self):
        k = len(self.invariant_factors)
        return [tuple(1 if i == j else 0 for j in range(k)) for i in range(k)]

    def __eq__(self, other):
        return (
            isinstance(other, FiniteAbelianGroup)
            and self.invariant_factors == other.invariant_factors
        )

    def __hash__(self):
        return hash(self.invariant_factors)

    def __repr__(self):
        if not self.invariant_factors:
            return "C1"
        return " x ".join(f"C{d}" for d in self.invariant_factors)


class Character:
    """Character of a FiniteAbelianGroup valued in exact roots of unity.

    chi(e_i) = zeta_N ^ (N/d_i * c_i) with N = exponent of the group; a value
    is reported as an exponent of zeta_N. Realization mod p^m maps zeta_N to
    a root of unity of the same order in Z/p^m or a Galois ring.
    """

    def __init__(self, group: FiniteAbelianGroup, components):
        self.group = group
        self.components = tuple(
            c % d for c, d in zip(components, group.invariant_factors)
        )

    def value_exponent(self, g) -> int:
        """Exponent a with chi(g) = zeta_N^a, N = group exponent."""
        N = self.group.exponent
        total = 0
        for c, x, d in zip(self.components, g, self.group.invariant_factors):
            total += c * x * (N // d)
        return total % N

    @property
    def order(self) -> int:
        N = self.group.exponent
        g = N
        for c, d in zip(self.components, self.group.invariant_factors):
            g = math.gcd(g, c * (N // d))
        return N // math.gcd(N, g) if N > 1 else 1

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.components)

    def mul(self, other: "Character") -> "Character":
        return Character(
            self.group,
            [a + b for a, b in zip(self.components, other.components)],
        )

    def inverse(self) -> "Character":
        return Character(self.group, [-c for c in self.components])

    def realize(self, ring):
        """Map of group elements to values in `ring` (mod p^m realization)."""
        N = self.group.exponent
        k = self.order
        if k == 1:
            return lambda g: ring.one
        zeta = root_of_unity_mod(ring, k)
        # chi(g) = zeta_k ^ (value_exponent * k / N)
        if isinstance(ring, GaloisRing):
            pw = ring.pow
        else:
            pw = lambda a, e: pow(a, e, ring.n)
        cache = {}

        def val(g):
            e = self.value_exponent(g) * k // N
            if e not in cache:
                cache[e] = pw(zeta, e)
            return cache[e]

        return val

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.group == other.group
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.group, self.components))

    def __repr__(self):
        return f"chi{self.components}"


def all_characters(group: FiniteAbelianGroup):
    return [
        Character(group, comps)
        for comps in itertools.product(*(range(d) for d in group.invariant_factors))
    ]


# ---------------------------------------------------------------------------
# group rings


class GroupRingElement:
    """Element of R[G], coefficients in a ring object from this module."""

    __slots__ = ("group", "ring", "coeffs")

    def __init__(self, group: FiniteAbelianGroup, ring, coeffs=None):
        self.group = group
        self.ring = ring
        self.coeffs = {}
        if coeffs:
            for g, c in coeffs.items():
                c = ring.coerce(c)
                if not ring.is_zero(c):
                    self.coeffs[tuple(g)] = c

    @classmethod
    def zero(cls, group, ring):
        return cls(group, ring)

    @classmethod
    def one(cls, group, ring):
        return cls(group, ring, {group.identity(): ring.one})

    @classmethod
    def basis_element(cls, group, ring, g, coeff=1):
        return cls(group, ring, {tuple(g): coeff})

    def coefficient(self, g):
        return self.coeffs.get(tuple(g), self.ring.zero)

    def add(self, other):
        out = dict(self.coeffs)
        R = self.ring
        for g, c in other.coeffs.items():
            s = R.add(out.get(g, R.zero), c)
            if R.is_zero(s):
                out.pop(g, None)
            else:
                out[g] = s
        e = GroupRingElement(self.group, R)
        e.coeffs = out
        return e

    def neg(self):
        R = self.ring
        e = GroupRingElement(self.group, R)
        e.coeffs = {g: R.neg(c) for g, c in self.coeffs.items()}
        return e

    def sub(self, other):
        return self.add(other.neg())

    def mul(self, other):
        G, R = self.group, self.ring
        out = {}
        for g1, c1 in self.coeffs.items():
            for g2, c2 in other.coeffs.items():
                g = G.op(g1, g2)
                prod = R.mul(c1, c2)
                s = R.add(out.get(g, R.zero), prod)
                if R.is_zero(s):
                    out.pop(g, None)
                else:
                    out[g] = s
        e = GroupRingElement(G, R)
        e.coeffs = out
        return e

    def scale(self, c):
        R = self.ring
        c = R.coerce(c)
        e = GroupRingElement(self.group, R)
        for g, v in self.coeffs.items():
            p = R.mul(c, v)
            if not R.is_zero(p):
                e.coeffs[g] = p
        return e

    def translate(self, g):
        """Left multiplication by the group element g."""
        G = self.group
        e = GroupRingElement(G, self.ring)
        e.coeffs = {G.op(tuple(g), h): c for h, c in self.coeffs.items()}
        return e

    def eq(self, other):
        R = self.ring
        keys = set(self.coeffs) | set(other.coeffs)
        return all(
            R.eq(self.coeffs.get(k, R.zero), other.coeffs.get(k, R.zero))
            for k in keys
        )

    def is_zero(self):
        return all(self.ring.is_zero(c) for c in self.coeffs.values())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{g}" for g, c in sorted(self.coeffs.items()))


def norm_element(group: FiniteAbelianGroup, ring) -> GroupRingElement:
    """Sum of all group elements."""
    e = GroupRingElement(group, ring)
    e.coeffs = {g: ring.one for g in group.elements()}
    return e


def idempotent(chi: Character, group: FiniteAbelianGroup, p: int, m: int, ring=None):
    """e_chi = (1/|G|) sum_g chi(g) g^{-1}, exact in the coefficient ring.

    Requires p not dividing |G| and chi realizable mod p^m; raises
    NON_INVERTIBLE_ORDER / UNREALIZABLE_CHARACTER otherwise.
    """
    if group.order % p == 0:
        raise AlgebraError("NON_INVERTIBLE_ORDER", f"p={p} divides |G|={group.order}")
    if ring is None:
        ring = character_ring(p, m, chi.order)
    val = chi.realize(ring)
    if isinstance(ring, GaloisRing):
        inv_order = ring.inv(ring.coerce(group.order))
        mulc = ring.mul
    else:
        inv_order = pow(group.order, -1, ring.n)
        mulc = lambda a, b: (a * b) % ring.n
    e = GroupRingElement(group, ring)
    for g in group.elements():
        c = mulc(val(g), inv_order)
        if not ring.is_zero(c):
            e.coeffs[group.inverse(g)] = c
    return e


def action_matrix_of_group_ring(elem: GroupRingElement, rho: dict):
    """Matrix of a group-ring element acting through matrices rho[g] mod n.

    rho maps each group element tuple to a square matrix (list of lists) over
    Z/n; returns sum_g c_g * rho[g] as an integer matrix reduced mod n.
    """
    ring = elem.ring
    n = ring.n
    size = len(next(iter(rho.values())))
    out = [[0] * size for _ in range(size)]
    for g, c in elem.coeffs.items():
        M = rho[g]
        for i in range(size):
            for j in range(size):
                out[i][j] = (out[i][j] + c * M[i][j]) % n
    return out


def image_basis_mod_pm(E: list[list[int]], p: int, m: int) -> list[list[int]]:
    """Basis of the image of an idempotent matrix E over Z/p^m.

    The image of an idempotent endomorphism of a free Z/p^m-module is free;
    columns of E independent mod p generate it and form a basis.
    """
    n = p**m
    size = len(E)
    cols = [[E[i][j] % n for i in range(size)] for j in range(size)]
    # Gaussian elimination mod p to pick independent columns
    reduced = []
    picked = []
    pivots = []
    for j, col in enumerate(cols):
        v = [x % p for x in col]
        for (pi, r) in zip(pivots, reduced):
            f = v[pi]
            if f:
                v = [(a - f * b) % p for a, b in zip(v, r)]
        nz = next((i for i, x in enumerate(v) if x), None)
        if nz is not None:
            inv = pow(v[nz], -1, p)
            v = [(x * inv) % p for x in v]
            pivots.append(nz)
            reduced.append(v)
            picked.append(j)
    return [cols[j] for j in picked]


def chi_component(rho: dict, chi: Character, group: FiniteAbelianGroup, p: int, m: int):
    """Basis (list of coordinate vectors over Z/p^m) of e_chi * M.

    M is a free Z/p^m-module with G-action given by matrices rho[g].
    """
    e = idempotent(chi, group, p, m, ring=ZModRing(p**m))
    E = action_matrix_of_group_ring(e, rho)
    return image_basis_mod_pm(E, p, m)
