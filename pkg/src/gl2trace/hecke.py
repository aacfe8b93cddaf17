"""Spherical Hecke algebra of GL(2) over a nonarchimedean local field.

Elements are finitely supported bi-K-invariant functions, stored by
double-coset coefficients: the key (a, b) with a >= b labels the coset
K.diag(p^a, p^b).K.  All measures are normalized so vol(K) = 1 and
vol(O) = 1 for the additive Haar measure.

The transform to symmetric Laurent polynomials in the dual-torus
coordinates Y1, Y2 and its inverse are exact; half-integral powers of
the residue cardinality live in the LaurentQ coefficient ring (v^2 = q).
"""

from fractions import Fraction

from .rings import LaurentQ, QiNumber, QiV, fr

INF = None  # valuation of zero


class LocalField:
    """Residue cardinality and uniformizer bookkeeping."""

    __slots__ = ("q",)

    def __init__(self, q):
        assert isinstance(q, int) and q >= 2
        self.q = q

    def v(self, k=1):
        return LaurentQ.v_power(k, self.q)

    def one(self):
        return LaurentQ(1, 0, self.q)

    def __eq__(self, other):
        return isinstance(other, LocalField) and other.q == self.q

    def __hash__(self):
        return hash(("LocalField", self.q))

    def __repr__(self):
        return "LocalField(q=%d)" % self.q


def _check_key(key):
    a, b = key
    assert isinstance(a, int) and isinstance(b, int)
    if a < b:
        raise ValueError("cocharacter pair must be dominant: %s" % (key,))
    return a, b


def coset_decomposition(field, key):
    """Canonical upper-triangular representatives x with
    K.diag(p^a, p^b).K = disjoint union of x.K.

    Representatives are [[p^i, u], [0, p^j]] with i + j = a + b,
    u running over residues mod p^i whose valuation keeps the
    elementary-divisor type equal to (a, b); entries are Fractions
    when b < 0.
    """
    a, b = _check_key(key)
    q = field.q
    m = a - b
    scale = Fraction(q) ** b
    reps = []
    if m == 0:
        return [((scale, Fraction(0)), (Fraction(0), scale))]
    for i in range(m + 1):
        j = m - i
        if i == 0:
            us = [0]
        elif i < m:
            us = [u for u in range(1, q ** i) if u % q != 0]
        else:
            us = list(range(q ** m))
        pi, pj = Fraction(q) ** i, Fraction(q) ** j
        for u in us:
            reps.append(((pi * scale, u * scale), (Fraction(0), pj * scale)))
    return reps


def coset_degree(field, key):
    " number of right cosets in the double coset; equals len(coset_decomposition) "
    a, b = _check_key(key)
    m = a - b
    if m == 0:
        return 1
    return field.q ** (m - 1) * (field.q + 1)


def _coset_classes(q, m):
    """Right-coset representatives of K.diag(p^m, 1).K (m >= 0) grouped by
    the data that Smith-form bookkeeping sees: (i, val u, multiplicity)
    with the rep shape [[p^i, u], [0, p^(m-i)]].  val u = INF for u = 0."""
    if m == 0:
        return [(0, INF, 1)]
    classes = [(0, INF, 1)]
    for i in range(1, m):
        classes.append((i, 0, q ** i - q ** (i - 1)))
    classes.append((m, INF, 1))
    for w in range(m):
        classes.append((m, w, q ** (m - w) - q ** (m - w - 1)))
    return classes


class HeckeElement:
    """Finitely supported bi-K-invariant function, by coset coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=None):
        self.field = field
        clean = {}
        for key, c in (coeffs or {}).items():
            key = _check_key(key)
            if isinstance(c, (int, Fraction)):
                c = LaurentQ(c, 0, field.q)
            assert isinstance(c, LaurentQ)
            if c.q is not None and c.q != field.q:
                raise ValueError("coefficient q mismatch")
            if c:
                clean[key] = LaurentQ(c.a, c.b, field.q)
        self.coeffs = clean

    @classmethod
    def char(cls, field, key, coeff=1):
        return cls(field, {key: coeff})

    @classmethod
    def unit(cls, field):
        return cls.char(field, (0, 0))

    def support(self):
        return sorted(self.coeffs)

    def __getitem__(self, key):
        return self.coeffs.get(_check_key(key), LaurentQ(0, 0, self.field.q))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, HeckeElement)
                and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field, tuple(sorted((k, v) for k, v in self.coeffs.items()))))

    def __add__(self, other):
        assert isinstance(other, HeckeElement) and other.field == self.field
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, LaurentQ(0, 0, self.field.q)) + c
        return HeckeElement(self.field, out)

    def __neg__(self):
        return HeckeElement(self.field, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return HeckeElement(self.field, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return convolve(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for key in self.support():
            parts.append("(%s)*char%s" % (self.coeffs[key], key))
        return " + ".join(parts)

    __repr__ = __str__

    # -- serialization --------------------------------------------------

    def to_text(self):
        lines = ["q %d kmin 0" % self.field.q]
        for (a, b) in self.support():
            c = self.coeffs[(a, b)]
            if c.b:
                lines.append("%d %d %s %s" % (a, b, c.a, c.b))
            else:
                lines.append("%d %d %s" % (a, b, c.a))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty Hecke element file")
        head = lines[0].split()
        if len(head) != 4 or head[0] != "q" or head[2] != "kmin":
            raise ValueError("bad header: %r" % lines[0])
        q, kmin = int(head[1]), int(head[3])
        field = LocalField(q)
        coeffs = {}
        for ln in lines[1:]:
            toks = ln.split()
            if len(toks) < 3:
                raise ValueError("bad coset line: %r" % ln)
            key = (int(toks[0]), int(toks[1]))
            powers = {kmin + k: Fraction(t) for k, t in enumerate(toks[2:])}
            c = LaurentQ.from_powers(powers, q)
            if key in coeffs:
                raise ValueError("duplicate coset %s" % (key,))
            coeffs[key] = c
        return cls(field, coeffs)


def convolve(h1, h2):
    """Exact convolution with vol(K) = 1, via coset classes.

    (f*g)(z) = sum over right-coset representatives x of the double
    cosets in supp f of f(x) g(x^-1 z); only the Smith type of x^-1 z
    matters, so representatives are processed in valuation classes.
    """
    if h1.field != h2.field:
        raise ValueError("mismatched base fields")
    field = h1.field
    q = field.q
    out = {}
    for (a1, b1), c1 in h1.coeffs.items():
        m1 = a1 - b1
        classes = _coset_classes(q, m1)
        for (a2, b2), c2 in h2.coeffs.items():
            c = c1 * c2
            dd = a1 + b1 + a2 + b2
            lo = b1 + b2
            hi = a1 + a2
            for bz in range(lo, (dd + 1) // 2 + (dd % 2 == 0)):
                az = dd - bz
                if az < bz or az > hi:
                    continue
                n = 0
                for i, w, count in classes:
                    j = m1 - i
                    # Smith valuations of x^-1 z for x in the class,
                    # z = diag(p^az, p^bz), both shifted back by b1
                    terms = [az - b1 - i, bz - b1 - j]
                    if w is not INF:
                        terms.append(w + bz - b1 - m1)
                    if min(terms) == b2:
                        n += count
                if n:
                    key = (az, bz)
                    out[key] = out.get(key, LaurentQ(0, 0, q)) + c * n
    return HeckeElement(field, out)


class SymLaurent:
    """Symmetric Laurent polynomial in Y1, Y2 with LaurentQ coefficients.

    Stored on canonical keys (i, j) with i >= j; a key with i > j stands
    for c*(Y1^i Y2^j + Y1^j Y2^i)."""

    __slots__ = ("coeffs", "q")

    def __init__(self, coeffs=None, q=None):
        clean = {}
        for (i, j), c in (coeffs or {}).items():
            assert i >= j
            if isinstance(c, (int, Fraction)):
                c = LaurentQ(c, 0, q)
            if c.q is not None:
                if q is None:
                    q = c.q
                elif q != c.q:
                    raise ValueError("coefficient q mismatch")
            if c:
                clean[(i, j)] = c
        self.coeffs = clean
        self.q = q

    @classmethod
    def one(cls, q=None):
        return cls({(0, 0): 1}, q)

    def support(self):
        return sorted(self.coeffs)

    def __getitem__(self, key):
        i, j = key
        if i < j:
            i, j = j, i
        return self.coeffs.get((i, j), LaurentQ(0, 0, self.q))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SymLaurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        assert isinstance(other, SymLaurent)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SymLaurent(out, self.q if self.q is not None else other.q)

    def __neg__(self):
        return SymLaurent({k: -c for k, c in self.coeffs.items()}, self.q)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SymLaurent({k: v * c for k, v in self.coeffs.items()}, self.q)

    def _full(self):
        " expand to a plain {(i, j): coeff} dict over both orderings "
        out = {}
        for (i, j), c in self.coeffs.items():
            out[(i, j)] = c
            if i != j:
                out[(j, i)] = c
        return out

    def __mul__(self, other):
        if not isinstance(other, SymLaurent):
            return self.scale(other)
        q = self.q if self.q is not None else other.q
        full = {}
        f2 = other._full()
        for (i1, j1), c1 in self._full().items():
            for (i2, j2), c2 in f2.items():
                k = (i1 + i2, j1 + j2)
                full[k] = full.get(k, 0) + c1 * c2
        out = {}
        for (i, j), c in full.items():
            if i >= j:
                out[(i, j)] = c
        return SymLaurent(out, q)

    __rmul__ = scale

    def evaluate(self, y1, y2):
        " substitute Y1 = y1, Y2 = y2; duck-typed over the value ring "
        total = None
        for (i, j), c in self.coeffs.items():
            term = y1 ** i * y2 ** j
            if i != j:
                term = term + y1 ** j * y2 ** i
            term = c * term
            total = term if total is None else total + term
        if total is None:
            return LaurentQ(0, 0, self.q)
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"

        def mono(i, j):
            fs = []
            if i:
                fs.append("Y1" if i == 1 else "Y1^%d" % i)
            if j:
                fs.append("Y2" if j == 1 else "Y2^%d" % j)
            return "*".join(fs) if fs else "1"

        parts = []
        for (i, j) in sorted(self.coeffs, key=lambda k: (-(k[0] + k[1]), -(k[0] - k[1]))):
            c = self.coeffs[(i, j)]
            if i == j:
                body = mono(i, j)
            else:
                body = "(%s + %s)" % (mono(i, j), mono(j, i))
            cs = str(c)
            if cs == "1" and body != "1":
                parts.append(body)
            elif body == "1":
                parts.append(cs)
            elif "+" in cs or cs.count("-") > (1 if cs.startswith("-") else 0):
                parts.append("(%s)*%s" % (cs, body))
            else:
                parts.append("%s*%s" % (cs, body))
        return " + ".join(parts)

    __repr__ = __str__

    def to_text(self):
        q = self.q
        lines = ["q %s kmin 0" % (q if q is not None else 0)]
        for (i, j) in self.support():
            c = self.coeffs[(i, j)]
            if c.b:
                lines.append("%d %d %s %s" % (i, j, c.a, c.b))
            else:
                lines.append("%d %d %s" % (i, j, c.a))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if len(head) != 4 or head[0] != "q" or head[2] != "kmin":
            raise ValueError("bad header: %r" % lines[0])
        q, kmin = int(head[1]), int(head[3])
        q = q if q else None
        coeffs = {}
        for ln in lines[1:]:
            toks = ln.split()
            key = (int(toks[0]), int(toks[1]))
            powers = {kmin + k: Fraction(t) for k, t in enumerate(toks[2:])}
            coeffs[key] = LaurentQ.from_powers(powers, q) if q else LaurentQ(powers.get(0, Fraction(0)))
        return cls(coeffs, q)


def n_integral(h, m1, m2):
    """Exact unipotent integral of h against the torus point
    diag(p^m1, p^m2) (times units): integral over x in F of
    h([[p^m1, p^m1 x], [0, p^m2]]) with vol(O) = 1."""
    q = h.field.q
    mn = min(m1, m2)
    total = LaurentQ(0, 0, q)
    c = h.coeffs.get((m1 + m2 - mn, mn))
    if c is not None:
        total = total + c * Fraction(q) ** (m1 - mn)
    if h.coeffs:
        minb = min(b for (_, b) in h.coeffs)
        for d1 in range(minb, mn):
            c = h.coeffs.get((m1 + m2 - d1, d1))
            if c is not None:
                total = total + c * (Fraction(q) ** (m1 - d1) - Fraction(q) ** (m1 - d1 - 1))
    return total


def satake_transform(h):
    """S(h) = sum over torus cocharacters of
    delta^(1/2) * (N-integral of h) * Y1^m1 Y2^m2, exact."""
    q = h.field.q
    pairs = set()
    for (a, b) in h.coeffs:
        for m1 in range(b, a + 1):
            m2 = a + b - m1
            if m1 >= m2:
                pairs.add((m1, m2))
    out = {}
    for (m1, m2) in pairs:
        val = LaurentQ.v_power(m2 - m1, q) * n_integral(h, m1, m2)
        if val:
            out[(m1, m2)] = val
    return SymLaurent(out, q)


def inverse_satake(poly, field=None):
    """Exact preimage of a symmetric Laurent polynomial under the
    transform, by triangularity with respect to dominance order."""
    if field is None:
        if poly.q is None:
            raise ValueError("need a base field: polynomial carries no q")
        field = LocalField(poly.q)
    q = field.q
    rest = SymLaurent(dict(poly.coeffs), q)
    coeffs = {}
    guard = 0
    while rest:
        guard += 1
        assert guard < 10000, "inverse transform failed to terminate"
        key = max(rest.coeffs, key=lambda k: (k[0] - k[1], k[0] + k[1]))
        i, j = key
        c = rest.coeffs[key] * LaurentQ.v_power(j - i, q)
        coeffs[(i, j)] = c
        rest = rest - satake_transform(HeckeElement.char(field, (i, j))).scale(c)
    return HeckeElement(field, coeffs)


class SatakeParameter:
    """Frobenius-Hecke parameter pair (alpha, beta).

    Exact mode stores Gaussian rationals (unit-circle points come from
    Pythagorean triples); numeric mode stores complex doubles."""

    __slots__ = ("alpha", "beta", "exact")

    def __init__(self, alpha, beta):
        exact = isinstance(alpha, QiNumber) and isinstance(beta, QiNumber)
        if not exact:
            alpha, beta = complex(alpha), complex(beta)
        self.alpha = alpha
        self.beta = beta
        self.exact = exact

    @classmethod
    def from_triple(cls, m, n, conj_pair=True):
        " unit-circle parameter from the Pythagorean triple generated by (m, n) "
        assert m > n > 0
        c = m * m + n * n
        alpha = QiNumber(Fraction(m * m - n * n, c), Fraction(2 * m * n, c))
        beta = alpha.conj() if conj_pair else alpha
        return cls(alpha, beta)

    @classmethod
    def trivial(cls):
        return cls(QiNumber(1), QiNumber(1))

    def is_unitary(self, tol=1e-10):
        if self.exact:
            return self.alpha.abs2() == 1 and self.beta.abs2() == 1
        return (abs(abs(self.alpha) - 1) < tol and abs(abs(self.beta) - 1) < tol)

    def __repr__(self):
        return "SatakeParameter(%s, %s)" % (self.alpha, self.beta)


def spherical_trace(h, satp):
    """Evaluate the transform of h at (alpha, beta), v = +sqrt(q).

    Exact parameters give a QiV value; numeric parameters give complex."""
    s = satake_transform(h)
    if satp.exact:
        one = QiV(QiNumber(1), QiNumber(0), h.field.q)
        val = s.evaluate(one * satp.alpha, one * satp.beta)
        if isinstance(val, LaurentQ):
            val = QiV.from_laurent(val)
        return val
    total = 0j
    for (i, j), c in s.coeffs.items():
        term = satp.alpha ** i * satp.beta ** j
        if i != j:
            term += satp.alpha ** j * satp.beta ** i
        total += c.to_float() * term
    return total
