"""Spinor valued forms on R^9: Theta, Theta*, the kernels P_r and commutants.

A spinor valued k-form is stored as {(blade, s): coeff} with a 9-bit blade and
spinor index 0..15.  For linear algebra the pair is flattened to the integer
position ``16 * (rank of blade among grade-k blades) + s``, which keeps the
canonical (blade, spinor) order.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .clifford import generators
from .exact_core import Matrix, axpy, common_kernel, rank_mod_p, restricted_kernel, span_rank, _clean
from .exterior import (Form, _rho_blade_general, blades_of_grade, popcount,
                       signed_permutation, two_form_of)
from .liealg import PAIRS, TRIPLES, stacked_rank

TORUS = ((1, 2), (3, 4), (5, 6), (7, 8))
GENERATOR_ORDER = TORUS + tuple(p for p in PAIRS if p not in TORUS)


class SpinorValuedForm:
    __slots__ = ("k", "coeffs")

    def __init__(self, k, coeffs=None):
        if not 0 <= k <= 9:
            raise ValueError("grade %d out of range" % k)
        c = {}
        for (b, s), x in (coeffs or {}).items():
            if popcount(b) != k or b >> 9 or not 0 <= s < 16:
                raise ValueError("bad key %r for grade %d" % ((b, s), k))
            if x:
                c[(b, s)] = _clean(x)
        self.k = k
        self.coeffs = dict(sorted(c.items()))

    @classmethod
    def pure(cls, form9, spinor):
        """omega (x) phi for a Form on R^9 and a spinor vector."""
        c = {}
        for b, x in form9.coeffs.items():
            for s, y in enumerate(spinor):
                if y:
                    c[(b, s)] = x * y
        return cls(form9.k, c)

    def __eq__(self, other):
        return isinstance(other, SpinorValuedForm) and self.k == other.k and self.coeffs == other.coeffs

    def __repr__(self):
        return "SpinorValuedForm(k=%d, terms=%d)" % (self.k, len(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def scaled(self, c):
        return SpinorValuedForm(self.k, {key: c * x for key, x in self.coeffs.items()})


@lru_cache(maxsize=None)
def _blade_index(k):
    bl = blades_of_grade(9, k)
    return tuple(bl), {b: i for i, b in enumerate(bl)}


def space_dim(k):
    return 16 * comb(9, k)


def to_index(svf):
    _, idx = _blade_index(svf.k)
    return {16 * idx[b] + s: x for (b, s), x in svf.coeffs.items()}


def from_index(k, vec):
    bl, _ = _blade_index(k)
    return SpinorValuedForm(k, {(bl[i >> 4], i & 15): x for i, x in vec.items()})


@lru_cache(maxsize=None)
def _perms():
    g = generators()
    return tuple(signed_permutation(g.gen(a)) for a in range(1, 10))


def _theta_raw(k, vec):
    """Theta_k on {(blade, s)}: sum_a (e_a ^ omega) (x) (I_a phi)."""
    perms = _perms()
    out = {}
    for (b, s), c in vec.items():
        for a in range(9):
            if b >> a & 1:
                continue
            sign = -1 if popcount(b & ((1 << a) - 1)) & 1 else 1
            pi, sg = perms[a]
            key = (b | 1 << a, pi[s])
            axpy(out, 1, {key: sign * sg[s] * c})
    return out


def _theta_star_raw(k, vec):
    """Theta*_k: -sum_a (e_a -| omega) (x) (I_a phi)."""
    perms = _perms()
    out = {}
    for (b, s), c in vec.items():
        for a in range(9):
            if not b >> a & 1:
                continue
            sign = -1 if popcount(b & ((1 << a) - 1)) & 1 else 1
            pi, sg = perms[a]
            key = (b ^ 1 << a, pi[s])
            axpy(out, 1, {key: -sign * sg[s] * c})
    return out


def theta(k, s):
    if not 0 <= k <= 8 or s.k != k:
        raise ValueError("theta needs a grade-%d input with 0 <= k <= 8" % k)
    return SpinorValuedForm(k + 1, _theta_raw(k, s.coeffs))


def theta_star(k, s):
    if not 1 <= k <= 9 or s.k != k:
        raise ValueError("theta_star needs a grade-%d input with 1 <= k <= 9" % k)
    return SpinorValuedForm(k - 1, _theta_star_raw(k, s.coeffs))


def theta_op(k):
    """Theta_k on flattened index vectors."""
    return lambda vec: to_index(SpinorValuedForm(k + 1, _theta_raw(k, from_index(k, vec).coeffs)))


def theta_star_op(k):
    return lambda vec: to_index(SpinorValuedForm(k - 1, _theta_star_raw(k, from_index(k, vec).coeffs)))


def unit_basis(n):
    return [{i: 1} for i in range(n)]


@lru_cache(maxsize=None)
def _p_space_vectors(r):
    if r == 0:
        return tuple(unit_basis(16))
    return tuple(restricted_kernel(unit_basis(space_dim(r)), theta_star_op(r)))


def p_space(r):
    """Integer basis (flattened index vectors) of P_r = ker Theta*_r."""
    if not 0 <= r <= 3:
        raise ValueError("p_space is available for 0 <= r <= 3")
    return list(_p_space_vectors(r))


def rank_of(vectors):
    """Exact rank of dict vectors.

    Full rank is first certified modulo a prime (a rank over GF(p) never
    exceeds the rational rank); otherwise the exact block-split kernel decides.
    """
    vectors = list(vectors)
    if rank_mod_p(vectors) == len(vectors):
        return len(vectors)
    ker = restricted_kernel(unit_basis(len(vectors)), lambda c: _combine(vectors, c))
    return len(vectors) - len(ker)


def _combine(vectors, c):
    acc = {}
    for i, x in c.items():
        axpy(acc, x, vectors[i])
    return acc


def verify_decomposition(k):
    if k not in (1, 2, 3):
        raise ValueError("decomposition check covers k = 1, 2, 3")
    pieces = []
    all_images = []
    for r in range(k + 1):
        vecs = p_space(r)
        for j in range(r, k):
            op = theta_op(j)
            vecs = [op(v) for v in vecs]
        rk = rank_of(vecs)
        pieces.append({"r": r, "dim_P": len(p_space(r)), "image_rank": rk,
                       "injective": rk == len(p_space(r))})
        all_images.extend(vecs)
    total = rank_of(all_images)
    want = space_dim(k)
    return {
        "k": k, "pieces": pieces, "total_rank": total, "expected": want,
        "dims_sum": sum(p["dim_P"] for p in pieces),
        "pass": total == want and all(p["injective"] for p in pieces)
        and sum(p["dim_P"] for p in pieces) == want,
    }


def theta_composite_constant():
    """c with Theta*_1 Theta_0 = c Id on the spinors (kept as computed)."""
    cs = set()
    for s in range(16):
        img = _theta_star_raw(1, _theta_raw(0, {(0, s): 1}))
        if set(img) != {(0, s)}:
            return None
        cs.add(img[(0, s)])
    return cs.pop() if len(cs) == 1 else None


def adjointness(kmax=2):
    """<Theta_k x, y> = -<x, Theta*_{k+1} y> on full bases."""
    bad = 0
    for k in range(kmax + 1):
        fwd = theta_op(k)
        bwd = theta_star_op(k + 1)
        n_k, n_k1 = space_dim(k), space_dim(k + 1)
        F = [fwd({i: 1}) for i in range(n_k)]
        B = [bwd({j: 1}) for j in range(n_k1)]
        for i in range(n_k):
            for j, x in F[i].items():
                if B[j].get(i, 0) != -x:
                    bad += 1
        for j in range(n_k1):
            for i, x in B[j].items():
                if F[i].get(j, 0) != -x:
                    bad += 1
    return {"mismatches": bad, "pass": bad == 0}


# spin(9) action on the various spaces ----------------------------------------

def vector_generator_cols(a, b):
    """ad(I_a I_b) on span{I_c}: I_b -> 2 I_a, I_a -> -2 I_b (columns as dicts)."""
    cols = [[] for _ in range(9)]
    cols[b - 1].append((a - 1, 2))
    cols[a - 1].append((b - 1, -2))
    return cols


@lru_cache(maxsize=None)
def lambda_action(k, a, b):
    """Sparse columns of the derivation action of I_a I_b on Lambda^k(R^9)."""
    bl, idx = _blade_index(k)
    cols = vector_generator_cols(a, b)
    return tuple({idx[nb]: v for nb, v in _rho_blade_general(cols, x).items() if v} for x in bl)


@lru_cache(maxsize=None)
def spinor_action(a, b):
    M = generators().gen(a) @ generators().gen(b)
    return tuple({i: M[i, j] for i in range(16) if M[i, j]} for j in range(16))


def tensor_action(A, B):
    """Columns of A (x) 1 + 1 (x) B in the flattened order i * dim(B) + s."""
    nb = len(B)
    out = []
    for i, ca in enumerate(A):
        for s, cb in enumerate(B):
            d = {}
            for r, v in ca.items():
                axpy(d, v, {r * nb + s: 1})
            for r, v in cb.items():
                axpy(d, v, {i * nb + r: 1})
            out.append(d)
    return tuple(out)


@lru_cache(maxsize=None)
def spinor_form_action(k, a, b):
    return tensor_action(lambda_action(k, a, b), spinor_action(a, b))


def apply_cols(cols, vec):
    out = {}
    for j, x in vec.items():
        axpy(out, x, cols[j])
    return out


def theta_equivariance(kmax=2):
    bad = 0
    for k in range(kmax + 1):
        fwd = theta_op(k)
        for a, b in PAIRS:
            A = spinor_form_action(k, a, b)
            A1 = spinor_form_action(k + 1, a, b)
            for i in range(space_dim(k)):
                if apply_cols(A1, fwd({i: 1})) != fwd(A[i]):
                    bad += 1
    return {"failures": bad, "pass": bad == 0}


def p_space_invariance(r):
    vecs = p_space(r)
    if r == 0:
        return True
    star = theta_star_op(r)
    for a, b in PAIRS:
        A = spinor_form_action(r, a, b)
        for v in vecs:
            if star(apply_cols(A, v)):
                return False
    return True


# commutants -------------------------------------------------------------------

def _commutator_op(cols, n):
    rows = [{} for _ in range(n)]
    for j, c in enumerate(cols):
        for i, v in c.items():
            rows[i][j] = v

    def op(T):
        # [T, A] on T stored as {i * n + l: t}
        out = {}
        for key, t in T.items():
            i, l = divmod(key, n)
            for j, v in rows[l].items():
                k2 = i * n + j
                y = out.get(k2, 0) + t * v
                if y:
                    out[k2] = y
                else:
                    del out[k2]
            for k, v in cols[i].items():
                k2 = k * n + l
                y = out.get(k2, 0) - t * v
                if y:
                    out[k2] = y
                else:
                    del out[k2]
        return out

    return op


def commutant_basis(actions, n):
    """Exact basis of {T : T A = A T for every A} as dict vectors over n*n entries."""
    return common_kernel(unit_basis(n * n), [_commutator_op(A, n) for A in actions])


def is_invariant(actions, vectors, membership):
    """Every A v satisfies the membership test (a function of a dict vector)."""
    return all(membership(apply_cols(A, v)) for A in actions for v in vectors)


def commutant_dim(actions, n, projector=None):
    """Dimension of the commutant of the action.

    Without a projector this is End_G(V) for the full n-dimensional space.  With
    an equivariant projector P onto an invariant subspace U, End_G(U) is
    identified with P End_G(V) P and its dimension is returned.
    """
    basis = commutant_basis(actions, n)
    if projector is None:
        return len(basis)
    P = projector
    comps = []
    for T in basis:
        M = Matrix.from_entries(n, n, {divmod(k, n): v for k, v in T.items()})
        comps.append(P @ M @ P)
    return stacked_rank(comps) if comps else 0


def generator_actions(space):
    """Sparse column actions of the 36 generators (torus first) on a named space."""
    if space == "delta9":
        return [spinor_action(a, b) for a, b in GENERATOR_ORDER], 16
    if space in ("vector", "lambda1"):
        return [lambda_action(1, a, b) for a, b in GENERATOR_ORDER], 9
    if space == "lambda2":
        return [lambda_action(2, a, b) for a, b in GENERATOR_ORDER], 36
    if space == "lambda3":
        return [lambda_action(3, a, b) for a, b in GENERATOR_ORDER], 84
    if space == "delta9+delta9":
        acts = []
        for a, b in GENERATOR_ORDER:
            S = spinor_action(a, b)
            acts.append(tuple(S) + tuple({i + 16: v for i, v in c.items()} for c in S))
        return acts, 32
    if space.startswith("lambda") and space.endswith("delta9"):
        k = int(space[len("lambda"):-len("xdelta9")])
        return [spinor_form_action(k, a, b) for a, b in GENERATOR_ORDER], space_dim(k)
    raise ValueError("unknown space %r" % space)


def p1_projector():
    """Equivariant projector of Lambda^1 (x) Delta_9 onto P_1 along Theta_0(Delta_9)."""
    c = theta_composite_constant()
    n = space_dim(1)
    fwd = theta_op(0)
    star = theta_star_op(1)
    entries = {}
    for j in range(n):
        img = {}
        for s, x in star({j: 1}).items():
            axpy(img, x, fwd({s: 1}))
        for i, x in img.items():
            entries[(i, j)] = -Fraction(x, 1) / c
        entries[(j, j)] = entries.get((j, j), 0) + 1
    return Matrix.from_entries(n, n, entries)


def commutant_report(deep=False):
    rows = []
    for name in ("delta9", "vector", "lambda2", "lambda3"):
        acts, n = generator_actions(name)
        d = commutant_dim(acts, n)
        rows.append({"space": name, "dim": n, "commutant": d, "expected": 1, "pass": d == 1})
    acts, n = generator_actions("lambda1xdelta9")
    P = p1_projector()
    basis = p_space(1)
    inv = p_space_invariance(1)
    d = commutant_dim(acts, n, projector=P) if inv else None
    rows.append({"space": "P1", "dim": len(basis), "commutant": d, "expected": 1,
                 "invariant": inv, "pass": d == 1})
    acts, n = generator_actions("delta9+delta9")
    d = commutant_dim(acts, n)
    rows.append({"space": "delta9+delta9", "dim": n, "commutant": d, "expected": 4, "pass": d == 4})
    if deep:
        # End_G(Lambda^2 (x) Delta_9) of dimension 3 certifies that the three
        # summands Delta_9, P_1, P_2 are irreducible and pairwise distinct
        acts, n = generator_actions("lambda2xdelta9")
        d = commutant_dim(acts, n)
        rows.append({"space": "lambda2xdelta9", "dim": n, "commutant": d, "expected": 3, "pass": d == 3})
    return rows


def lambda2_lambda3_embeddings():
    g = generators()
    two = [two_form_of(g.gen(a) @ g.gen(b)) for a, b in PAIRS]
    three = [two_form_of(g.gen(a) @ g.gen(b) @ g.gen(c)) for a, b, c in TRIPLES]
    r2 = span_rank([f.coeffs for f in two])
    r3 = span_rank([f.coeffs for f in three])
    rt = span_rank([f.coeffs for f in two + three])
    m12 = g.gen(1) @ g.gen(2)
    return {
        "rank_lambda2": r2, "rank_lambda3": r3, "rank_total": rt,
        "dim_lambda2_delta9": comb(16, 2),
        "transpose_sign": m12.T == -m12,
        "pass": (r2, r3, rt) == (36, 84, 120) and m12.T == -m12,
    }
