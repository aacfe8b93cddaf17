"""Finite abelian Fourier analysis and the quadratic idele class model.

Two layers.  The abstract layer: finite abelian groups as tuples of
cyclic orders, characters valued in exact cyclotomics, Fourier sums,
and the finite Poisson identity.  The arithmetic layer: the group
D_S = prod over v in S of Q_v^x / squares, modulo global S-units, whose
characters are the quadratic characters of discriminant supported in S;
evaluation goes through exact Hilbert symbols place by place.
"""

import itertools
import math
import random
from fractions import Fraction

INF_PLACE = "inf"


# -- exact cyclotomics --------------------------------------------------

_CYCLO_CACHE = {}


def cyclotomic_poly(L):
    " coefficients of the L-th cyclotomic polynomial, ascending, exact "
    if L in _CYCLO_CACHE:
        return _CYCLO_CACHE[L]
    poly = [-1] + [0] * (L - 1) + [1]   # x^L - 1
    for d in range(1, L):
        if L % d:
            continue
        phi_d = cyclotomic_poly(d)
        poly = _poly_divexact(poly, phi_d)
    _CYCLO_CACHE[L] = poly
    return poly


def _poly_divexact(num, den):
    num = list(num)
    dd = len(den) - 1
    assert den[dd] == 1, "cyclotomic divisors are monic"
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    assert all(x == 0 for x in num[:dd]), "inexact cyclotomic division"
    return out


class CycloNumber:
    """Element of Q(zeta_L), reduced mod the L-th cyclotomic polynomial."""

    __slots__ = ("L", "coeffs")

    def __init__(self, L, coeffs):
        " coeffs: iterable over the power basis 1..zeta^(phi(L)-1), already reduced "
        deg = len(cyclotomic_poly(L)) - 1
        coeffs = tuple(Fraction(c) for c in coeffs)
        assert len(coeffs) == deg
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("CycloNumber is immutable")

    @classmethod
    def from_buckets(cls, L, buckets):
        " sum of c * zeta^e over an {exponent: rational} dict, one reduction "
        poly = [Fraction(0)] * L
        for e, c in buckets.items():
            poly[e % L] += Fraction(c)
        return cls(L, _cyclo_reduce(L, poly))

    @classmethod
    def rational(cls, L, c):
        deg = len(cyclotomic_poly(L)) - 1
        return cls(L, (Fraction(c),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zeta(cls, L, k=1):
        return cls.from_buckets(L, {k: 1})

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            assert other.L == self.L, "mixed cyclotomic levels"
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.rational(self.L, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNumber(self.L, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.L, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return CycloNumber(self.L, _cyclo_reduce(self.L, out))

    __rmul__ = __mul__

    def conj(self):
        " complex conjugation zeta -> zeta^(-1) "
        poly = [Fraction(0)] * self.L
        for k, c in enumerate(self.coeffs):
            poly[(-k) % self.L] += c
        return CycloNumber(self.L, _cyclo_reduce(self.L, poly))

    @property
    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self):
        assert self.is_rational, "value is irrational"
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.L, self.coeffs))

    def __complex__(self):
        z = 0j
        for k, c in enumerate(self.coeffs):
            z += float(c) * complex(math.cos(2 * math.pi * k / self.L),
                                    math.sin(2 * math.pi * k / self.L))
        return z

    def __repr__(self):
        if self.is_rational:
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append("%s*z%d^%d" % (c, self.L, k) if k else str(c))
        return " + ".join(terms)


def _cyclo_reduce(L, poly):
    phi = cyclotomic_poly(L)
    deg = len(phi) - 1
    work = [Fraction(c) for c in poly]
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if c:
            work[k] = Fraction(0)
            for j in range(deg + 1):
                work[k - deg + j] -= c * phi[j]
    work = work[:deg]
    work += [Fraction(0)] * (deg - len(work))
    return tuple(work)


# -- finite abelian groups ---------------------------------------------


class FiniteAbelianGroup:
    """Product of cyclic groups; elements are exponent tuples."""

    __slots__ = ("orders", "labels")

    def __init__(self, orders, labels=None):
        orders = tuple(int(n) for n in orders)
        assert all(n >= 1 for n in orders)
        if labels is not None:
            labels = tuple(labels)
            assert len(labels) == len(orders)
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, *_):
        raise AttributeError("FiniteAbelianGroup is immutable")

    @property
    def order(self):
        out = 1
        for n in self.orders:
            out *= n
        return out

    @property
    def exponent(self):
        out = 1
        for n in self.orders:
            out = out * n // math.gcd(out, n)
        return out

    def identity(self):
        return (0,) * len(self.orders)

    def elements(self):
        return itertools.product(*(range(n) for n in self.orders))

    def add(self, g1, g2):
        return tuple((a + b) % n for a, b, n in zip(g1, g2, self.orders))

    def neg(self, g):
        return tuple((-a) % n for a, n in zip(g, self.orders))

    def contains(self, g):
        return (len(g) == len(self.orders)
                and all(0 <= a < n for a, n in zip(g, self.orders)))

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and other.orders == self.orders

    def __hash__(self):
        return hash(self.orders)

    def __repr__(self):
        return "FiniteAbelianGroup%s" % (self.orders,)


class GroupCharacter:
    """Character determined by an exponent functional: the value on g is
    zeta_L ^ (sum of a_i g_i L/n_i)."""

    __slots__ = ("group", "exps")

    def __init__(self, group, exps):
        exps = tuple(exps)
        assert group.contains(exps)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "exps", exps)

    def __setattr__(self, *_):
        raise AttributeError("GroupCharacter is immutable")

    def zeta_exponent(self, g):
        L = self.group.exponent
        return sum(a * x * (L // n)
                   for a, x, n in zip(self.exps, g, self.group.orders)) % L

    def __call__(self, g):
        return CycloNumber.zeta(self.group.exponent, self.zeta_exponent(g))

    def is_trivial(self):
        return all(a == 0 for a in self.exps)

    def __eq__(self, other):
        return (isinstance(other, GroupCharacter)
                and other.group == self.group and other.exps == self.exps)

    def __hash__(self):
        return hash((self.group, self.exps))

    def __repr__(self):
        return "GroupCharacter%s" % (self.exps,)


def characters(group):
    " all characters, in deterministic element order "
    return [GroupCharacter(group, e) for e in group.elements()]


class GroupFunction:
    """Total map from group elements to exact values."""

    __slots__ = ("group", "values")

    def __init__(self, group, values):
        if callable(values):
            values = {g: values(g) for g in group.elements()}
        vals = {}
        for g in group.elements():
            if g not in values:
                raise ValueError("function not total: missing %s" % (g,))
            vals[g] = values[g]
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, *_):
        raise AttributeError("GroupFunction is immutable")

    def __call__(self, g):
        return self.values[g]


def fourier(f, psi):
    """F(psi) = sum over g of f(g) * conj(psi(g)), exact; accumulated in
    zeta-exponent buckets with a single cyclotomic reduction."""
    L = f.group.exponent
    buckets = {}
    for g in f.group.elements():
        e = (-psi.zeta_exponent(g)) % L
        buckets[e] = buckets.get(e, Fraction(0)) + _to_fraction(f(g))
    return CycloNumber.from_buckets(L, buckets)


def _to_fraction(v):
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    raise TypeError("fourier needs rational function values, got %r" % (v,))


def fourier_cyclo(f, psi):
    " fourier for functions with cyclotomic values "
    L = f.group.exponent
    total = CycloNumber.rational(L, 0)
    for g in f.group.elements():
        total = total + f(g) * psi(g).conj()
    return total


def subgroup_generated(group, gens):
    " closure of a generator list; elements as a sorted tuple "
    seen = {group.identity()}
    frontier = [group.identity()]
    gens = [tuple(g) for g in gens]
    for g in gens:
        assert group.contains(g), "generator outside the group"
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.add(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return tuple(sorted(seen))


def _as_subgroup(group, spec):
    " explicit element collection; must be an actual subgroup "
    elems = {tuple(e) for e in spec}
    if not elems:
        return (group.identity(),)
    for e in elems:
        if not group.contains(e):
            raise ValueError("element %s outside the group" % (e,))
    if group.identity() not in elems:
        raise ValueError("subgroup must contain the identity")
    # greedy generating set keeps the closure check near-linear
    gens = []
    span = {group.identity()}
    for e in sorted(elems):
        if e not in span:
            gens.append(e)
            span = set(subgroup_generated(group, gens))
    if span != elems:
        raise ValueError("subgroup spec is not closed")
    return tuple(sorted(elems))


def annihilator(group, subgroup_elems):
    " characters trivial on the subgroup "
    return [psi for psi in characters(group)
            if all(psi.zeta_exponent(h) == 0 for h in subgroup_elems)]


def poisson_check(group, subgroup_spec, f):
    """Finite Poisson summation: returns the two sides
    (sum of f over H, |H|/|G| times the sum of fourier(f) over the
    annihilator of H); they agree as exact cyclotomic numbers."""
    if not isinstance(f, GroupFunction):
        f = GroupFunction(group, f)
    H = _as_subgroup(group, subgroup_spec)
    L = group.exponent
    lhs = Fraction(0)
    for h in H:
        lhs += _to_fraction(f(h))
    rhs = CycloNumber.rational(L, 0)
    for psi in annihilator(group, H):
        rhs = rhs + fourier(f, psi)
    rhs = rhs * Fraction(len(H), group.order)
    return CycloNumber.rational(L, lhs), rhs


def sample_poisson_triple(rng, max_order=1024, max_work=1 << 16):
    """Random (group, subgroup generators, rational function) with
    |G| <= max_order and the Fourier workload |G|^2/|H| capped; biased
    toward small cyclic orders so exponents stay tame."""
    while True:
        k = rng.randint(1, 4)
        orders = []
        for _ in range(k):
            orders.append(rng.choice([2, 2, 2, 3, 3, 4, 4, 5, 6, 8, 9, 12, 16]))
        g = FiniteAbelianGroup(orders)
        if g.order > max_order:
            continue
        ngen = rng.randint(0, 2)
        gens = [tuple(rng.randrange(n) for n in g.orders) for _ in range(ngen)]
        h = subgroup_generated(g, gens)
        if g.order * g.order // len(h) > max_work:
            continue
        f = {e: Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for e in g.elements()}
        return g, h, f


# -- arithmetic symbols -------------------------------------------------


def legendre(a, p):
    " quadratic residue symbol mod an odd prime "
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def kronecker(a, n):
    " Kronecker symbol (a/n), full integer extension "
    if n == 0:
        return 1 if a in (1, -1) else 0
    out = 1
    if n < 0:
        n = -n
        if a < 0:
            out = -out
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            out = -out
    while True:
        a %= n
        if n == 1:
            return out
        if a == 0:
            return 0
        t = 0
        while a % 2 == 0:
            a //= 2
            t += 1
        if t % 2 and n % 8 in (3, 5):
            out = -out
        if a % 4 == 3 and n % 4 == 3:
            out = -out
        a, n = n, a
    # not reached


def _split_val(x, p):
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x


def hilbert_symbol(a, b, place):
    " Hilbert symbol (a, b)_v over Q; place is 'inf' or a prime "
    a, b = Fraction(a), Fraction(b)
    assert a != 0 and b != 0
    # clear denominators by squares
    ai = a.numerator * a.denominator
    bi = b.numerator * b.denominator
    if place == INF_PLACE:
        return -1 if ai < 0 and bi < 0 else 1
    p = place
    sa = -1 if ai < 0 else 1
    sb = -1 if bi < 0 else 1
    alpha, u = _split_val(abs(ai), p)
    beta, w = _split_val(abs(bi), p)
    u *= sa
    w *= sb
    if p == 2:
        eps_u = ((u - 1) // 2) % 2
        eps_w = ((w - 1) // 2) % 2
        om_u = ((u * u - 1) // 8) % 2
        om_w = ((w * w - 1) // 8) % 2
        e = (eps_u * eps_w + alpha * om_w + beta * om_u) % 2
        return -1 if e else 1
    s = 1
    if alpha % 2 and beta % 2 and (p - 1) // 2 % 2:
        s = -s
    if beta % 2 and legendre(u % p, p) == -1:
        s = -s
    if alpha % 2 and legendre(w % p, p) == -1:
        s = -s
    return s


# -- the S-class group D_S ----------------------------------------------


def _places_key(v):
    return (-1, 0) if v == INF_PLACE else (0, v)


def normalize_places(S):
    " canonical place list: 'inf' first, then primes ascending "
    out = []
    for v in S:
        if v in (INF_PLACE, "oo", "real", 0):
            out.append(INF_PLACE)
        else:
            p = int(v)
            assert p >= 2
            out.append(p)
    out = sorted(set(out), key=_places_key)
    assert out and out[0] == INF_PLACE, "place set must contain the archimedean place"
    for p in out[1:]:
        d = 2
        while d * d <= p:
            assert p % d, "finite places must be primes"
            d += 1
    return out


def _unit_bits_2(u):
    " F2 coordinates of an odd integer's class in Z_2-units mod squares "
    u %= 8
    return ((1 if u in (3, 7) else 0), (1 if u in (3, 5) else 0))


def local_square_class(t, place):
    " F2 coordinate tuple of t in Q_v^x / (Q_v^x)^2 "
    t = Fraction(t)
    assert t != 0
    if place == INF_PLACE:
        return (1 if t < 0 else 0,)
    p = place
    n = t.numerator * t.denominator
    sign = -1 if n < 0 else 1
    val, u = _split_val(abs(n), p)
    u *= sign
    if p == 2:
        b1, b2 = _unit_bits_2(u)
        return (val % 2, b1, b2)
    return (val % 2, 0 if legendre(u % p, p) == 1 else 1)


def _bit_labels(places):
    out = []
    for v in places:
        if v == INF_PLACE:
            out.append((v, "sign"))
        elif v == 2:
            out.extend([(2, "val"), (2, "u7"), (2, "u5")])
        else:
            out.extend([(v, "val"), (v, "nonres")])
    return out


def _basis_rep(label):
    " a rational idele component generating the labeled ambient bit "
    v, kind = label
    if kind == "sign":
        return -1
    if kind == "val":
        return v
    if kind == "u7":
        return 7
    if kind == "u5":
        return 5
    # smallest quadratic nonresidue mod v
    for n in range(2, v):
        if legendre(n, v) == -1:
            return n
    raise AssertionError("no nonresidue found")


class SClassGroup:
    """Finite model of the quadratic idele class quotient at level S.

    Ambient space: the F2 vector space G_S = prod over v in S of
    Q_v^x/(Q_v^x)^2, with labeled coordinates.  H_S is the span of the
    diagonal images of -1 and the finite primes of S; the quotient D_S
    is presented on the free coordinates left by eliminating H_S."""

    def __init__(self, S):
        self.places = normalize_places(S)
        self.bit_labels = _bit_labels(self.places)
        self.nbits = len(self.bit_labels)
        units = [-1] + [p for p in self.places[1:]]
        self.hgens = [self._diagonal_vector(u) for u in units]
        self._echelon()
        free = [i for i in range(self.nbits) if i not in self.pivot_cols]
        self.free_idx = free
        self.group = FiniteAbelianGroup((2,) * len(free),
                                        [self.bit_labels[i] for i in free])
        self._build_dual()

    # group interface, delegated to the quotient presentation -----------

    @property
    def orders(self):
        return self.group.orders

    @property
    def labels(self):
        return self.group.labels

    @property
    def order(self):
        return self.group.order

    @property
    def exponent(self):
        return self.group.exponent

    def identity(self):
        return self.group.identity()

    def elements(self):
        return self.group.elements()

    def add(self, g1, g2):
        return self.group.add(g1, g2)

    def neg(self, g):
        return self.group.neg(g)

    def contains(self, g):
        return self.group.contains(g)

    # ambient vectors ---------------------------------------------------

    def _diagonal_vector(self, t):
        " full diagonal image: unit parts included at every place "
        bits = []
        for v in self.places:
            bits.extend(local_square_class(t, v))
        return tuple(b % 2 for b in bits)

    def diagonal_vector(self, t):
        t = Fraction(t)
        self._check_s_unit(t)
        return self._diagonal_vector(t)

    def section_vector(self, t):
        """Section into the ambient space: sign at the archimedean place
        and p^(val) at finite places, unit parts forgotten."""
        t = Fraction(t)
        self._check_s_unit(t)
        bits = []
        for v in self.places:
            if v == INF_PLACE:
                bits.append(1 if t < 0 else 0)
            else:
                n = t.numerator * t.denominator
                val, _ = _split_val(abs(n), v)
                if v == 2:
                    bits.extend([val % 2, 0, 0])
                else:
                    bits.extend([val % 2, 0])
        return tuple(bits)

    def _check_s_unit(self, t):
        assert t != 0
        n = abs(t.numerator * t.denominator)
        for p in self.places[1:]:
            while n % p == 0:
                n //= p
        if n != 1:
            raise ValueError("%s is not an S-unit for S = %s" % (t, self.places))

    # quotient ----------------------------------------------------------

    def _echelon(self):
        rows = [list(v) for v in self.hgens]
        pivots = {}
        r = 0
        for col in range(self.nbits):
            sel = None
            for i in range(r, len(rows)):
                if rows[i][col]:
                    sel = i
                    break
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            for i in range(len(rows)):
                if i != r and rows[i][col]:
                    rows[i] = [(x + y) % 2 for x, y in zip(rows[i], rows[r])]
            pivots[col] = r
            r += 1
        self._rows = rows[:r]
        self.pivot_cols = pivots

    def reduce_vector(self, vec):
        " quotient class of an ambient vector, as an exponent tuple "
        v = list(vec)
        for col, r in self.pivot_cols.items():
            if v[col]:
                v = [(x + y) % 2 for x, y in zip(v, self._rows[r])]
        assert all(v[c] == 0 for c in self.pivot_cols)
        return tuple(v[i] for i in self.free_idx)

    def project(self, t):
        " class of the section of an S-unit t in D_S "
        return self.reduce_vector(self.section_vector(t))

    def diagonal_class(self, t):
        " class of the full diagonal image (trivial by construction) "
        return self.reduce_vector(self.diagonal_vector(t))

    # dual --------------------------------------------------------------

    def _build_dual(self):
        finite = self.places[1:]
        cands = []
        for signs in (1, -1):
            for mask in itertools.product((0, 1), repeat=len(finite)):
                c = signs
                for p, e in zip(finite, mask):
                    c *= p ** e
                cands.append(c)
        survivors = []
        for c in cands:
            ok = True
            for u in [-1] + list(finite):
                prod = 1
                for v in self.places:
                    prod *= hilbert_symbol(c, u, v)
                if prod != 1:
                    ok = False
                    break
            if ok:
                survivors.append(c)
        chars = []
        for c in survivors:
            d = c if c % 4 == 1 else 4 * c
            table = tuple(
                0 if hilbert_symbol(c, _basis_rep(lbl), lbl[0]) == 1 else 1
                for lbl in self.bit_labels)
            chars.append(QuadChar(d, c, self, table))
        chars.sort(key=lambda ch: (abs(ch.d), ch.d < 0))
        self.quad_chars = chars
        assert len(chars) == self.group.order, \
            "dual size %d does not match group order %d" % (len(chars), self.group.order)

    def __repr__(self):
        return "SClassGroup(S=%s, D=(Z/2)^%d)" % (self.places, len(self.free_idx))


class QuadChar:
    """Quadratic character of fundamental discriminant d, living on the
    S-class group; evaluation on rationals by Kronecker symbol, on group
    elements by Hilbert pairing against the free-coordinate basis."""

    __slots__ = ("d", "c", "sgroup", "_table")

    def __init__(self, d, c=None, sgroup=None, table=None):
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "c", c if c is not None else d)
        object.__setattr__(self, "sgroup", sgroup)
        object.__setattr__(self, "_table", table)

    def __setattr__(self, *_):
        raise AttributeError("QuadChar is immutable")

    def __call__(self, t):
        return quad_char_eval(self, t)

    def on_element(self, g):
        " value on an abstract D_S element (exponent tuple), +1 or -1 "
        assert self.sgroup is not None
        e = 0
        for x, i in zip(g, self.sgroup.free_idx):
            if x:
                e ^= self._table[i]
        return -1 if e else 1

    def on_vector(self, vec):
        " value on an ambient bit vector "
        assert self.sgroup is not None
        e = 0
        for x, t in zip(vec, self._table):
            if x:
                e ^= t
        return -1 if e else 1

    def is_trivial(self):
        return self.d == 1

    def sign_value(self):
        " value on the archimedean sign class (-1 at infinity) "
        return 1 if self.d > 0 else -1

    def unramified_at(self, p):
        if p == 2:
            return self.d % 2 == 1
        return self.d % p != 0

    def __eq__(self, other):
        return isinstance(other, QuadChar) and other.d == self.d

    def __hash__(self):
        return hash(("QuadChar", self.d))

    def __repr__(self):
        return "QuadChar(d=%d)" % self.d


def quad_char_eval(chi, t):
    " Kronecker symbol (d/t) extended multiplicatively to rationals "
    d = chi.d if isinstance(chi, QuadChar) else int(chi)
    t = Fraction(t)
    assert t != 0
    return kronecker(d, t.numerator) * kronecker(d, t.denominator)


def class_group_mod_squares(S):
    " labeled finite model of the quadratic idele class group at level S "
    return SClassGroup(S)


def project_to_D(t, sgroup):
    " class of the S-unit t in the quotient group "
    return sgroup.project(Fraction(t))


# -- text formats -------------------------------------------------------


def parse_group_function(text):
    " 'group n1 n2 ...' header plus 'f e1,e2,... value' lines "
    group = None
    values = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        toks = ln.split()
        if toks[0] == "group":
            group = FiniteAbelianGroup(int(x) for x in toks[1:])
        elif toks[0] == "f":
            assert group is not None, "group line must come first"
            elem = tuple(int(x) for x in toks[1].split(","))
            values[elem] = Fraction(toks[2])
        else:
            raise ValueError("bad line: %r" % ln)
    assert group is not None, "missing group line"
    return group, GroupFunction(group, values)


def format_group_function(f):
    lines = ["group " + " ".join(str(n) for n in f.group.orders)]
    for g in f.group.elements():
        lines.append("f %s %s" % (",".join(str(x) for x in g), f(g)))
    return "\n".join(lines) + "\n"
