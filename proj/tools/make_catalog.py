"""Writes data/catalog.json: generator matrices for the exceptional complex
reflection groups G4..G34 over cyclotomic fields Q(zeta_m).

Rank 2 groups are found inside mu_M * B for a binary polyhedral group B in
SU(2). Every G_k of that family is normal in the ambient group, so its
reflections are a union of ambient conjugacy classes of reflections; the
script tries unions of up to three classes and keeps the one with the right
order, reflection orders and number of reflections.

Higher rank groups are generated by unitary reflections in a few seed root
lines. The orbit of the seed lines is closed under its own reflections and
has the expected number of hyperplanes, which pins the group down. Orders
are confirmed by enumeration here (up to G32) and again by the C++ side,
whose Molien recovery compares against the expected degrees.

Entries are reduced to the smallest Q(zeta_m') holding all generator
entries. Output coefficients are in the power basis 1, zeta, ...,
zeta^(phi(m)-1).
"""

import cmath
import itertools
import json
import math
import pathlib
from fractions import Fraction as F

import numpy as np
import sympy

X = sympy.symbols("x")
_PHI_CACHE = {}


def phi_poly(m):
    if m not in _PHI_CACHE:
        _PHI_CACHE[m] = [int(c) for c in sympy.Poly(sympy.cyclotomic_poly(m, X), X).all_coeffs()]
    return _PHI_CACHE[m]


class CF:
    """Element of Q(zeta_m) as an unreduced coefficient list over zeta^k, k < m."""

    __slots__ = ("m", "c")

    def __init__(self, m, c=None):
        self.m = m
        self.c = c if c is not None else [F(0)] * m

    @staticmethod
    def rat(m, r):
        x = CF(m)
        x.c[0] = F(r)
        return x

    @staticmethod
    def zeta(m, k):
        x = CF(m)
        x.c[k % m] = F(1)
        return x

    def __add__(self, o):
        return CF(self.m, [a + b for a, b in zip(self.c, o.c)])

    def __sub__(self, o):
        return CF(self.m, [a - b for a, b in zip(self.c, o.c)])

    def __neg__(self):
        return CF(self.m, [-a for a in self.c])

    def __mul__(self, o):
        if isinstance(o, (int, F)):
            return CF(self.m, [a * o for a in self.c])
        out = [F(0)] * self.m
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[(i + j) % self.m] += a * b
        return CF(self.m, out)

    __rmul__ = __mul__

    def conj(self):
        out = [F(0)] * self.m
        for k, a in enumerate(self.c):
            out[(-k) % self.m] += a
        return CF(self.m, out)

    def galois(self, k):
        out = [F(0)] * self.m
        for j, a in enumerate(self.c):
            out[(j * k) % self.m] += a
        return CF(self.m, out)

    def value(self):
        return sum(complex(float(a)) * cmath.exp(2j * math.pi * k / self.m) for k, a in enumerate(self.c) if a)

    def reduced(self):
        phi = phi_poly(self.m)
        deg = len(phi) - 1
        c = list(self.c)
        for k in range(self.m - 1, deg - 1, -1):
            a = c[k]
            if a:
                for i, p in enumerate(phi):
                    c[k - i] -= a * p
        return c[:deg]

    def is_zero(self):
        return not any(self.reduced())

    def rational(self):
        r = self.reduced()
        if any(r[1:]):
            return None
        return r[0]

    def inverse(self):
        r = self.reduced()
        deg = len(r)
        cols = []
        for j in range(deg):
            cols.append((self * CF.zeta(self.m, j)).reduced())
        a = sympy.Matrix(deg, deg, lambda i, j: sympy.Rational(cols[j][i].numerator, cols[j][i].denominator))
        rhs = sympy.Matrix([1] + [0] * (deg - 1))
        sol = a.LUsolve(rhs)
        out = CF(self.m)
        for j in range(deg):
            out.c[j] = F(int(sympy.fraction(sol[j])[0]), int(sympy.fraction(sol[j])[1]))
        return out


def embed(x, m):
    """x in Q(zeta_k) with k | m as an element of Q(zeta_m)."""
    out = CF(m)
    for j, a in enumerate(x.c):
        out.c[(j * (m // x.m)) % m] += a
    return out


def sqrt5(m):
    z5 = m // 5
    return CF.rat(m, 1) + 2 * (CF.zeta(m, z5) + CF.zeta(m, 4 * z5))


def sqrt2(m):
    z8 = m // 8
    return CF.zeta(m, z8) + CF.zeta(m, -z8)


def sqrt_minus7(m):
    z7 = m // 7
    out = CF(m)
    for a in (1, 2, 4):
        out = out + CF.zeta(m, a * z7)
    for a in (3, 5, 6):
        out = out - CF.zeta(m, a * z7)
    return out


# ----------------------------------------------------------------- matrices


def mat_mul(a, b):
    n = len(a)
    m = a[0][0].m
    out = [[CF(m) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if a[i][k].is_zero():
                continue
            for j in range(n):
                out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def mat_scale(a, s):
    return [[s * x for x in row] for row in a]


def numeric(a):
    return np.array([[x.value() for x in row] for row in a], dtype=complex)


def reflection(v, lam):
    """x -> x + (lam - 1) <x, v> / <v, v> v with <x, v> = sum x_i conj(v_i)."""
    m = v[0].m
    n = len(v)
    norm = CF(m)
    for x in v:
        norm = norm + x * x.conj()
    inv = norm.inverse()
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            e = (lam - CF.rat(m, 1)) * v[i] * v[j].conj() * inv
            if i == j:
                e = e + CF.rat(m, 1)
            row.append(e)
        out.append(row)
    return out


def key(mat):
    # The offset keeps exact dyadic values away from rounding boundaries.
    a = np.asarray(mat) * 1e6 + 0.318309
    return np.floor(a.real).astype(np.int64).tobytes() + np.floor(a.imag + 0.318309).astype(np.int64).tobytes()


def closure_numeric(gens, cap):
    n = gens[0].shape[0]
    ident = np.eye(n, dtype=complex)
    seen = {key(ident)}
    frontier = [ident]
    count = 1
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x @ g
                k = key(y)
                if k not in seen:
                    seen.add(k)
                    nxt.append(y)
                    count += 1
                    if count > cap:
                        return None
        frontier = nxt
    return count


# ------------------------------------------------------------ rank 2 search


def quaternion(m, a, b, c, d):
    """a + b i + c j + d k as an SU(2) matrix, entries already in Q(zeta_m)."""
    i = CF.zeta(m, m // 4)
    return [[a + b * i, c + d * i], [-c + d * i, a - b * i]]


def binary_generators(kind, m):
    one = CF.rat(m, 1)
    zero = CF(m)
    half = F(1, 2)
    gi = quaternion(m, zero, one, zero, zero)
    gj = quaternion(m, zero, zero, one, zero)
    w = quaternion(m, one * half, one * half, one * half, one * half)
    gens = [gi, gj, w]
    if kind == "O":
        inv_r2 = sqrt2(m) * half
        gens.append(quaternion(m, inv_r2, inv_r2, zero, zero))
    if kind == "I":
        s5 = sqrt5(m)
        phi = (one + s5) * half
        phinv = (s5 - one) * half
        gens.append(quaternion(m, phi * half, phinv * half, one * half, zero))
    return gens


class Ambient:
    """mu_M * B as pairs (s, b) meaning zeta_M^s * B[b]."""

    def __init__(self, kind, big_m):
        self.M = big_m
        self.m = big_m
        gens = binary_generators(kind, self.m)
        num = [numeric(g) for g in gens]
        ident = np.eye(2, dtype=complex)
        self.elems = [ident]
        self.exact_word = [[]]
        index = {key(ident): 0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for gi, g in enumerate(num):
                    y = self.elems[x] @ g
                    k = key(y)
                    if k not in index:
                        index[k] = len(self.elems)
                        self.elems.append(y)
                        self.exact_word.append(self.exact_word[x] + [gi])
                        nxt.append(index[k])
            frontier = nxt
        self.gens_exact = gens
        self.index = index
        nb = len(self.elems)
        self.mult = [[index[key(self.elems[i] @ self.elems[j])] for j in range(nb)] for i in range(nb)]
        self.neg = [index[key(-self.elems[i])] for i in range(nb)]
        self.eig = [np.linalg.eigvals(e) for e in self.elems]

    def canon(self, s, b):
        s %= self.M
        s2, b2 = (s + self.M // 2) % self.M, self.neg[b]
        return (s, b) if b <= b2 else (s2, b2)

    def mul(self, x, y):
        return self.canon(x[0] + y[0], self.mult[x[1]][y[1]])

    def inverse(self, x):
        for j in range(len(self.elems)):
            if self.mult[x[1]][j] == 0:
                return self.canon(-x[0], j)
        raise ValueError

    def value(self, x):
        return cmath.exp(2j * math.pi * x[0] / self.M) * self.elems[x[1]]

    def reflection_eigen(self, x):
        """Nontrivial eigenvalue if x is a reflection, else None."""
        z = cmath.exp(2j * math.pi * x[0] / self.M)
        ev = [z * e for e in self.eig[x[1]]]
        ones = [abs(e - 1) < 1e-9 for e in ev]
        if sum(ones) != 1:
            return None
        return ev[1] if ones[0] else ev[0]

    def elements(self):
        out = set()
        for s in range(self.M):
            for b in range(len(self.elems)):
                out.add(self.canon(s, b))
        return out

    def exact(self, x):
        mat = [[CF.rat(self.m, 1), CF(self.m)], [CF(self.m), CF.rat(self.m, 1)]]
        for g in self.exact_word[x[1]]:
            mat = mat_mul(mat, self.gens_exact[g])
        return mat_scale(mat, CF.zeta(self.m, x[0] * (self.m // self.M)))


def eigen_order(lam):
    for k in range(1, 121):
        if abs(lam**k - 1) < 1e-9:
            return k
    raise ValueError


def subgroup(amb, gens):
    ident = amb.canon(0, 0)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = amb.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def generated_by_classes(amb, classes):
    gens = [c[0] for c in classes]
    while True:
        h = subgroup(amb, gens)
        missing = [x for c in classes for x in c if x not in h]
        if not missing:
            return h
        gens.append(missing[0])


def small_generating_set(amb, group, refls):
    refls = sorted(refls, key=lambda r: (-eigen_order(amb.reflection_eigen(r)), r))
    for size in (2, 3):
        for combo in itertools.combinations(refls, size):
            if len(subgroup(amb, combo)) == len(group):
                return list(combo)
    raise ValueError("no generating set of reflections of size <= 3")


def rank2_family(kind, big_m, targets):
    amb = Ambient(kind, big_m)
    everything = amb.elements()
    refls = [x for x in everything if amb.reflection_eigen(x) is not None]
    b_elems = [amb.canon(0, b) for b in range(len(amb.elems))]
    classes = []
    done = set()
    for r in sorted(refls):
        if r in done:
            continue
        orbit = set()
        for b in b_elems:
            orbit.add(amb.mul(amb.mul(b, r), amb.inverse(b)))
        done |= orbit
        classes.append(sorted(orbit))
    found = {}
    for size in (1, 2, 3):
        for combo in itertools.combinations(classes, size):
            h = generated_by_classes(amb, combo)
            hr = [x for x in h if amb.reflection_eigen(x) is not None]
            orders = frozenset(eigen_order(amb.reflection_eigen(x)) for x in hr)
            for name, (order, refl_orders, nrefl) in targets.items():
                if name not in found and len(h) == order and len(hr) == nrefl and orders == frozenset(refl_orders):
                    found[name] = (h, hr)
    out = {}
    for name in targets:
        if name not in found:
            raise RuntimeError(f"{name} not found in the {kind} family")
        h, hr = found[name]
        gens = small_generating_set(amb, h, hr)
        hyperplanes = set()
        for r in hr:
            w = amb.value(r)
            hyperplanes.add(line_key(np.linalg.svd(w - np.eye(2))[0][:, 0]))
        out[name] = ([amb.exact(g) for g in gens], len(hyperplanes), kind, big_m)
    return out


def line_key(v):
    v = np.asarray(v, dtype=complex)
    i = int(np.argmax(np.abs(v) > 1e-7))
    v = v / v[i]
    v = v / np.linalg.norm(v)
    return key(v)


# ------------------------------------------------------- higher rank lines


def reflect_vec(u, lam, v):
    """Numeric unitary reflection in u with eigenvalue lam applied to v."""
    return v + (lam - 1) * np.vdot(u, v) / np.vdot(u, u) * u


def line_closure(seeds, cap=400):
    """seeds: list of (numeric vector, order). Returns the closed list of (vector, order)."""
    lines = []
    keys = {}
    for v, k in seeds:
        lk = line_key(v)
        if lk not in keys:
            keys[lk] = k
            lines.append((np.asarray(v, dtype=complex), k))
    changed = True
    while changed:
        changed = False
        for u, k in list(lines):
            lam = cmath.exp(2j * math.pi / k)
            for v, kv in list(lines):
                w = reflect_vec(u, lam, v)
                lk = line_key(w)
                if lk not in keys:
                    keys[lk] = kv
                    lines.append((w, kv))
                    changed = True
                    if len(lines) > cap:
                        return None
    return lines


def exact_vec(m, entries):
    return [x if isinstance(x, CF) else CF.rat(m, x) for x in entries]


def root_of_unity(m, k):
    if k == 2:
        return CF.rat(m, -1)
    if m % k:
        raise ValueError(f"no primitive {k}-th root in Q(zeta_{m})")
    return CF.zeta(m, m // k)


def rank_n_entry(name, m, roots, expected_lines, order):
    """roots: list of (exact vector, reflection order)."""
    def closed_size(rs):
        lines = line_closure([(np.array([x.value() for x in v]), k) for v, k in rs])
        return None if lines is None else len(lines)

    got_lines = closed_size(roots)
    if got_lines != expected_lines:
        raise RuntimeError(f"{name}: line closure has {got_lines} lines, expected {expected_lines}")
    # Drop seeds the others already generate.
    i = 0
    while i < len(roots):
        rest = roots[:i] + roots[i + 1:]
        if closed_size(rest) == expected_lines:
            roots = rest
        else:
            i += 1
    gens = [reflection(v, root_of_unity(m, k)) for v, k in roots]
    if order is not None and order <= 200000:
        got = closure_numeric([numeric(g) for g in gens], order)
        if got != order:
            raise RuntimeError(f"{name}: enumeration gives {got}, expected {order}")
    return gens


# ------------------------------------------------------- field reduction


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def in_subfield(x, d):
    m = x.m
    base = x.reduced()
    for k in range(1, m):
        if math.gcd(k, m) == 1 and k % d == 1 % d:
            if x.galois(k).reduced() != base:
                return False
    return True


def to_subfield(x, d):
    """Coordinates of x in the power basis of Q(zeta_d), given it lies there."""
    m = x.m
    deg_d = len(phi_poly(d)) - 1
    target = x.reduced()
    cols = [CF.zeta(m, j * (m // d)).reduced() for j in range(deg_d)]
    a = sympy.Matrix(len(target), deg_d, lambda i, j: sympy.Rational(cols[j][i].numerator, cols[j][i].denominator))
    b = sympy.Matrix([sympy.Rational(t.numerator, t.denominator) for t in target])
    sol, params = a.gauss_jordan_solve(b)
    if params.shape[0] != 0:
        raise RuntimeError("underdetermined subfield coordinates")
    out = CF(d)
    for j in range(deg_d):
        num, den = sympy.fraction(sol[j])
        out.c[j] = F(int(num), int(den))
    return out


def reduce_field(gens):
    m = gens[0][0][0].m
    entries = [x for g in gens for row in g for x in row]
    for d in divisors(m):
        if d % 2 == 1 and d > 1 and m % (2 * d) == 0:
            continue  # Q(zeta_d) = Q(zeta_2d); keep the even label
        if all(in_subfield(x, d) for x in entries):
            return d, [[[to_subfield(x, d) for x in row] for row in g] for g in gens]
    return m, gens


def serialize(gens, m):
    deg = len(phi_poly(m)) - 1
    out = []
    for g in gens:
        rows = []
        for row in g:
            cells = []
            for x in row:
                r = x.reduced() if x.m == m else embed(x, m).reduced()
                cells.append([str(c) for c in (r + [F(0)] * deg)[:deg]])
            rows.append(cells)
        out.append(rows)
    return out


def is_unitary(gens):
    for g in gens:
        a = numeric(g)
        if not np.allclose(a.conj().T @ a, np.eye(a.shape[0]), atol=1e-9):
            return False
    return True


# ------------------------------------------------------------------ data

RANK2 = {
    # name: (degrees, reflection orders present)
    "G4": ((4, 6), (3,)),
    "G5": ((6, 12), (3,)),
    "G6": ((4, 12), (2, 3)),
    "G7": ((12, 12), (2, 3)),
    "G8": ((8, 12), (2, 4)),
    "G9": ((8, 24), (2, 4)),
    "G10": ((12, 24), (2, 3, 4)),
    "G11": ((24, 24), (2, 3, 4)),
    "G12": ((6, 8), (2,)),
    "G13": ((8, 12), (2,)),
    "G14": ((6, 24), (2, 3)),
    "G15": ((12, 24), (2, 3)),
    "G16": ((20, 30), (5,)),
    "G17": ((20, 60), (2, 5)),
    "G18": ((30, 60), (3, 5)),
    "G19": ((60, 60), (2, 3, 5)),
    "G20": ((12, 30), (3,)),
    "G21": ((12, 60), (2, 3)),
    "G22": ((12, 20), (2,)),
}
FAMILY = {"T": (24, range(4, 8)), "O": (24, range(8, 16)), "I": (60, range(16, 23))}

HIGHER = {
    "G24": ((4, 6, 14), (1, 9, 11)),
    "G25": ((6, 9, 12), (1, 4, 7)),
    "G26": ((6, 12, 18), (1, 7, 13)),
    "G27": ((6, 12, 30), (1, 19, 25)),
    "G29": ((4, 8, 12, 20), (1, 9, 13, 17)),
    "G31": ((8, 12, 20, 24), (1, 13, 17, 29)),
    "G32": ((12, 18, 24, 30), (1, 7, 13, 19)),
    "G33": ((4, 6, 10, 12, 18), (1, 7, 9, 13, 15)),
    "G34": ((6, 12, 18, 24, 30, 42), (1, 13, 19, 25, 31, 37)),
}


def higher_rank():
    out = {}
    # G24 over Q(sqrt(-7)): B3 roots plus (alpha, 1, 1), alpha = (-1 + sqrt(-7)) / 2.
    m = 7
    alpha = (CF.rat(m, -1) + sqrt_minus7(m)) * F(1, 2)
    one, zero = CF.rat(m, 1), CF(m)
    roots = [([one, -one, zero], 2), ([zero, one, -one], 2), ([zero, zero, one], 2), ([alpha, one, one], 2)]
    out["G24"] = (rank_n_entry("G24", m, roots, 21, 336), "B3 roots e_3, e_i - e_j and (alpha,1,1), alpha = (-1+sqrt(-7))/2")
    # G25: order 3 reflections in e_i and (1,1,1); G26 adds the order 2 root e_1 - e_2.
    m = 3
    one, zero = CF.rat(m, 1), CF(m)
    w = CF.zeta(m, 1)
    g25 = [([one, zero, zero], 3), ([zero, one, zero], 3), ([zero, zero, one], 3), ([one, one, one], 3)]
    out["G25"] = (rank_n_entry("G25", m, g25, 12, 648), "order 3 reflections in e_i and (1,1,1) over Q(omega)")
    g26 = [([one, zero, zero], 3), ([one, -one, zero], 2), ([zero, one, -one], 2), ([one, one, one], 3)]
    out["G26"] = (rank_n_entry("G26", m, g26, 21, 1296), "order 3 reflections in e_1, (1,1,1) and order 2 in e_1 - e_2, e_2 - e_3")
    # G27: H3 roots plus an Eisenstein root, over Q(zeta_15).
    m = 15
    one, zero = CF.rat(m, 1), CF(m)
    s5 = sqrt5(m)
    phi = (one + s5) * F(1, 2)
    phinv = (s5 - one) * F(1, 2)
    w = CF.zeta(m, 5)
    h3 = [([one, zero, zero], 2), ([zero, one, zero], 2), ([phi * F(1, 2), phinv * F(1, 2), one * F(1, 2)], 2)]
    extra = find_g27_root(m, h3)
    out["G27"] = (rank_n_entry("G27", m, h3 + [(extra, 2)], 45, 2160), "H3 roots plus one Eisenstein root, closed to 45 lines")
    # G29 and G31 over Q(i): monomial roots plus (1,1,1,1).
    m = 4
    one, zero = CF.rat(m, 1), CF(m)
    i = CF.zeta(m, 1)
    perm = [([one, -one, zero, zero], 2), ([zero, one, -one, zero], 2), ([zero, zero, one, -one], 2)]
    g29 = perm + [([one, -i, zero, zero], 2), ([one, one, one, one], 2)]
    out["G29"] = (rank_n_entry("G29", m, g29, 40, 7680), "G(4,4,4) roots plus (1,1,1,1)")
    g31 = perm + [([one, -i, zero, zero], 2), ([zero, zero, zero, one], 2), ([one, one, one, one], 2)]
    out["G31"] = (rank_n_entry("G31", m, g31, 60, 46080), "G(4,2,4) roots plus (1,1,1,1)")
    # G32: order 3 reflections in Witting lines.
    m = 3
    one, zero = CF.rat(m, 1), CF(m)
    w = CF.zeta(m, 1)
    g32 = find_g32_roots(m)
    out["G32"] = (rank_n_entry("G32", m, g32, 40, 155520), "order 3 reflections in roots from e_i, (0,1,1,1), (1,0,1,-1), closed to 40 lines")
    # G34: G(3,3,6) roots plus (1,...,1); G33 lives on the orthogonal complement of (1,...,1).
    perm6 = []
    for k in range(5):
        v = [zero] * 6
        v[k], v[k + 1] = one, -one
        perm6.append((v, 2))
    g34 = perm6 + [([one, -w, zero, zero, zero, zero], 2), ([one] * 6, 2)]
    lines = line_closure([(np.array([x.value() for x in v]), k) for v, k in g34], cap=200)
    if lines is None or len(lines) != 126:
        raise RuntimeError("G34 line closure")
    out["G34"] = ([reflection(v, CF.rat(m, -1)) for v, _ in g34], "G(3,3,6) roots plus (1,1,1,1,1,1); order not enumerated")
    out["G33"] = (g33_from_complement(m, lines), "roots of the G34 system orthogonal to (1,...,1), in the basis e_i - e_6")
    return out


def find_g27_root(m, h3):
    one, zero = CF.rat(m, 1), CF(m)
    w = CF.zeta(m, 5)
    s5 = sqrt5(m)
    phi = (one + s5) * F(1, 2)
    phinv = (s5 - one) * F(1, 2)
    pool = [zero, one, -one, w, w * w, -w, -w * w, phi, phinv, -phi, -phinv, phi * w, phinv * w, phi * w * w, phinv * w * w]
    seeds = [(np.array([x.value() for x in v]), k) for v, k in h3]
    for cand in itertools.product(pool, repeat=3):
        if all(c.is_zero() for c in cand[:1]):
            continue
        num = np.array([c.value() for c in cand])
        if np.linalg.norm(num) < 1e-9:
            continue
        lines = line_closure(seeds + [(num, 2)], cap=60)
        if lines is not None and len(lines) == 45:
            return list(cand)
    raise RuntimeError("no G27 root found")


def find_g32_roots(m):
    one, zero = CF.rat(m, 1), CF(m)
    basis = [[one if j == i else zero for j in range(4)] for i in range(4)]
    return [(b, 3) for b in basis] + [([zero, one, one, one], 3), ([one, zero, one, -one], 3)]


def g33_from_complement(m, lines):
    u = np.ones(6)
    perp = [v for v, _ in lines if abs(np.vdot(u, v)) < 1e-9]
    if len(perp) != 45:
        raise RuntimeError(f"G33: {len(perp)} lines orthogonal to (1,...,1)")
    one, zero = CF.rat(m, 1), CF(m)
    w = CF.zeta(m, 1)
    perp_keys = {line_key(v) for v in perp}
    roots6 = []
    for k in range(4):
        v = [zero] * 6
        v[k], v[k + 1] = one, -one
        roots6.append(v)
    roots6.append([one, one, w, w, w * w, w * w])
    roots6.append([one, w, one, w, w * w, w * w])
    gens = []
    for v in roots6:
        if line_key(np.array([x.value() for x in v])) not in perp_keys:
            raise RuntimeError("G33 seed is not a G34 root")
        r = reflection(v, CF.rat(m, -1))
        # Columns: images of b_i = e_i - e_6 in the same basis.
        mat = [[CF(m) for _ in range(5)] for _ in range(5)]
        for i in range(5):
            img = [r[k][i] - r[k][5] for k in range(6)]
            for k in range(5):
                mat[k][i] = img[k]
        gens.append(mat)
    got = closure_numeric([numeric(g) for g in gens], 51840)
    if got != 51840:
        raise RuntimeError(f"G33 enumeration gives {got}")
    return gens


def main():
    groups = []
    for kind, (big_m, rng) in FAMILY.items():
        # Order, reflection orders and the reflection count sum(d_i - 1).
        targets = {f"G{k}": (math.prod(RANK2[f"G{k}"][0]), RANK2[f"G{k}"][1], sum(RANK2[f"G{k}"][0]) - 2) for k in rng}
        found = rank2_family(kind, big_m, targets)
        for name, (gens, hyperplanes, fam, bm) in found.items():
            degrees = list(RANK2[name][0])
            m, red = reduce_field(gens)
            groups.append({
                "name": name,
                "n": 2,
                "m": m,
                "unitary": is_unitary(red),
                "real": False,
                "source": f"reflections in mu_{bm} * binary {dict(T='tetrahedral', O='octahedral', I='icosahedral')[fam]} group",
                "expected_order": math.prod(degrees),
                "expected_degrees": degrees,
                "expected_coexponents": [1, hyperplanes - 1],
                "generators": serialize(red, m),
            })
            print(name, "m =", m, "gens", len(red), "hyperplanes", hyperplanes, flush=True)
    for name, (gens, source) in higher_rank().items():
        degrees, coexps = HIGHER[name]
        m, red = reduce_field(gens)
        groups.append({
            "name": name,
            "n": len(degrees),
            "m": m,
            "unitary": is_unitary(red),
            "real": False,
            "source": source,
            "expected_order": math.prod(degrees),
            "expected_degrees": list(degrees),
            "expected_coexponents": list(coexps),
            "generators": serialize(red, m),
        })
        print(name, "m =", m, "gens", len(red), flush=True)
    groups.sort(key=lambda g: int(g["name"][1:]))
    path = pathlib.Path(__file__).resolve().parent.parent / "data" / "catalog.json"
    path.write_text(json.dumps({"schema": 1, "groups": groups}, indent=1) + "\n")
    print("wrote", path, len(groups), "groups")


if __name__ == "__main__":
    main()
