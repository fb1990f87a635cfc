"""Finite-field point counts of conifold representation spaces

Representations of the cut algebra of dimension alpha = (a0, a1) are
triples (A2, B1, B2) of matrices over F_p with A2 of shape a1 x a0,
B1 and B2 of shape a0 x a1, subject to B1 A2 B2 = B2 A2 B1. Counts
are exhaustive; the outermost loop runs over A2 so that the products
A2 B depend only on the loop variable and are computed once.
"""
import logging
import multiprocessing
import warnings

import numpy as np
from sympy import isprime

from . import errors
from .conifold import first_proof_series, universal_series
from .plethystic import commuting_motive
from .ring import evaluate_at_prime, gl_motive, minus_q_power
from .settings import get_settings


__all__ = ["CountQuery", "WorkerCountWarning", "batch_rank", "count_commuting",
           "count_cut_reps", "count_gl", "count_strata", "matrices",
           "predicted_commuting", "predicted_count", "predicted_gl",
           "predicted_strata"]

logger = logging.getLogger(__name__)


class WorkerCountWarning(UserWarning):
    pass


#: number of matrices processed at once in chunked enumerations
CHUNK_SIZE = 2**14


class CountQuery(object):
    def __init__(self, alpha, p, cap=None):
        """Point count of the representation space of alpha over F_p

        Parameters
        ----------
        alpha: tuple of int
            dimension vector (a0, a1)
        p: int
            prime
        cap: int or None
            maximum enumeration size; defaults to the "cap" setting
            (environment variable CONIFOLD_DT_CAP)
        """
        self.alpha = tuple(int(a) for a in alpha)
        if len(self.alpha) != 2 or min(self.alpha) < 0:
            raise ValueError("Invalid dimension vector {}!".format(alpha))
        self.p = int(p)
        if not isprime(self.p):
            raise ValueError("Only prime fields are supported, "
                             "got p={}!".format(p))
        self.cap = _resolve_cap(cap)

    def __repr__(self):
        return "<{}: alpha={} p={} at {}>".format(
            self.__class__.__name__, self.alpha, self.p, hex(id(self)))

    @property
    def size(self):
        """number of triples (A2, B1, B2)"""
        a0, a1 = self.alpha
        return self.p ** (3 * a0 * a1)

    def check_size(self):
        _check_cap(self.size, self.cap)


def _check_cap(size, cap):
    if size > cap:
        raise errors.EnumerationTooLargeError(
            size, cap, "Enumeration of {} elements exceeds the cap "
            "of {}!".format(size, cap))


def _resolve_cap(cap):
    if cap is None:
        cap = get_settings()["cap"]
    return int(cap)


def matrices(rows, cols, p, start=0, stop=None):
    """Matrices over F_p with index in [start, stop)

    The entries of matrix number k are the base-p digits of k.
    """
    entries = rows * cols
    if stop is None:
        stop = p ** entries
    index = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(entries, dtype=np.int64)
    digits = (index[:, None] // powers[None, :]) % p
    return digits.reshape(index.size, rows, cols)


def batch_rank(mats, p):
    """Ranks over F_p of a stack of matrices (Gauss-Jordan, vectorized)

    Parameters
    ----------
    mats: np.ndarray of shape (k, rows, cols)
        integer matrices
    p: int
        prime

    Returns
    -------
    rank: np.ndarray of shape (k,)
    """
    mats = np.array(mats, dtype=np.int64) % p
    count, rows, cols = mats.shape
    rank = np.zeros(count, dtype=np.int64)
    if rows == 0 or cols == 0 or count == 0:
        return rank
    inv = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        inv[x] = pow(x, p - 2, p)
    row_ids = np.arange(rows)
    for col in range(cols):
        candidates = (mats[:, :, col] != 0) & (row_ids[None, :]
                                               >= rank[:, None])
        sel = np.nonzero(candidates.any(axis=1))[0]
        if sel.size == 0:
            continue
        piv = np.argmax(candidates[sel], axis=1)
        top = rank[sel]
        # swap the pivot row into place
        row_top = mats[sel, top].copy()
        mats[sel, top] = mats[sel, piv]
        mats[sel, piv] = row_top
        scale = inv[mats[sel, top, col]]
        mats[sel, top] = (mats[sel, top] * scale[:, None]) % p
        factors = mats[sel, :, col].copy()
        factors[np.arange(sel.size), top] = 0
        pivot_rows = mats[sel, top]
        mats[sel] = (mats[sel]
                     - factors[:, :, None] * pivot_rows[:, None, :]) % p
        rank[sel] += 1
    return rank


def _relation_mask(a2, bs, p):
    """eq[i, j] is True iff B_i A2 B_j = B_j A2 B_i"""
    prods = np.matmul(a2[None, :, :], bs) % p
    cross = np.matmul(bs[:, None, :, :], prods[None, :, :, :]) % p
    eq = np.all(cross == cross.transpose(1, 0, 2, 3), axis=(2, 3))
    return eq


def _stable_ranks(a2, bs, p):
    """Ranks of T^d for T = [[0, B2], [A2, 0]] and all B2 in bs"""
    n = bs.shape[0]
    a0, a1 = bs.shape[1], bs.shape[2]
    dim = a0 + a1
    tmat = np.zeros((n, dim, dim), dtype=np.int64)
    tmat[:, :a0, a0:] = bs
    tmat[:, a0:, :a0] = a2[None, :, :]
    power = tmat.copy()
    for _ in range(dim - 1):
        power = np.matmul(power, tmat) % p
    return batch_rank(power, p)


def _count_chunk(args):
    """Sum of relation counts (and strata) for A2 in [start, stop)"""
    alpha, p, start, stop, strata = args
    a0, a1 = alpha
    bs = matrices(a0, a1, p)
    total = 0
    buckets = {}
    for a2 in matrices(a1, a0, p, start, stop):
        eq = _relation_mask(a2, bs, p)
        if not np.array_equal(eq, eq.T):
            raise errors.OracleError(
                "Relation is not symmetric in B1 and B2!")
        if strata:
            weights = eq.sum(axis=0)
            ranks = _stable_ranks(a2, bs, p)
            for rank in np.unique(ranks):
                key = int(rank) // 2
                buckets[key] = buckets.get(key, 0) + \
                    int(weights[ranks == rank].sum())
        total += int(eq.sum())
    return total, buckets


def _run_chunks(alpha, p, strata, workers, a2_range):
    a0, a1 = alpha
    if a2_range is None:
        a2_range = (0, p ** (a0 * a1))
    start, stop = a2_range
    if workers is None:
        workers = get_settings()["workers"]
    requested = int(workers)
    workers = max(1, min(requested, stop - start))
    if workers < requested:
        warnings.warn("Only {} matrices A2 to distribute, using {} "
                      "worker(s) instead of {}!".format(
                          stop - start, workers, requested),
                      WorkerCountWarning)
    bounds = np.linspace(start, stop, workers + 1).astype(np.int64)
    tasks = [(alpha, p, int(lo), int(hi), strata)
             for lo, hi in zip(bounds[:-1], bounds[1:])]
    logger.info("Counting alpha=%s over F_%d in %d chunk(s)",
                alpha, p, len(tasks))
    if workers == 1:
        results = [_count_chunk(t) for t in tasks]
    else:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_count_chunk, tasks)
    total = sum(r[0] for r in results)
    buckets = {}
    for _, part in results:
        for key, value in part.items():
            buckets[key] = buckets.get(key, 0) + value
    return total, buckets


def count_cut_reps(query, workers=None, a2_range=None):
    """Number of triples (A2, B1, B2) with B1 A2 B2 = B2 A2 B1

    Parameters
    ----------
    query: CountQuery
        dimension vector, prime and cap
    workers: int or None
        number of processes splitting the A2 range
    a2_range: tuple of int or None
        restrict the outermost enumeration to A2 indices [start, stop)
    """
    query.check_size()
    a0, a1 = query.alpha
    if a0 * a1 == 0:
        return 1
    total, _ = _run_chunks(query.alpha, query.p, False, workers, a2_range)
    return total


def predicted_count(alpha, p):
    """A_alpha [GL_a0][GL_a1] (-q)^-(a0-a1)^2 evaluated at L = p"""
    a0, a1 = alpha
    series = universal_series(max(a0 + a1, 1))
    motive = series[(a0, a1)] * gl_motive(a0) * gl_motive(a1) \
        * minus_q_power(-(a0 - a1) ** 2)
    return _as_count(evaluate_at_prime(motive, p), motive)


def _as_count(value, motive):
    if value.denominator != 1:
        raise errors.OracleError(
            "Motive '{}' does not give an integer count!".format(motive))
    return int(value)


def count_gl(n, p, cap=None):
    """Number of invertible n x n matrices over F_p by enumeration"""
    _check_cap(p ** (n * n), _resolve_cap(cap))
    if n == 0:
        return 1
    total = p ** (n * n)
    count = 0
    for start in range(0, total, CHUNK_SIZE):
        mats = matrices(n, n, p, start, min(start + CHUNK_SIZE, total))
        count += int(np.count_nonzero(batch_rank(mats, p) == n))
    return count


def predicted_gl(n, p):
    return _as_count(evaluate_at_prime(gl_motive(n), p), gl_motive(n))


def _invertible(n, p):
    total = p ** (n * n)
    found = []
    for start in range(0, total, CHUNK_SIZE):
        mats = matrices(n, n, p, start, min(start + CHUNK_SIZE, total))
        found.append(mats[batch_rank(mats, p) == n])
    return np.concatenate(found)


def count_commuting(a, p, cap=None):
    """Number of pairs (C1, C2), C2 invertible, with C2^-1 C1 C2 = C1"""
    _check_cap(p ** (2 * a * a), _resolve_cap(cap))
    if a == 0:
        return 1
    ends = matrices(a, a, p)
    count = 0
    step = max(1, CHUNK_SIZE // ends.shape[0])
    units = _invertible(a, p)
    for start in range(0, units.shape[0], step):
        c2 = units[start:start + step]
        left = np.matmul(ends[:, None], c2[None]) % p
        right = np.matmul(c2[None], ends[:, None]) % p
        count += int(np.all(left == right, axis=(2, 3)).sum())
    return count


def predicted_commuting(a, p):
    """[GL_a] sum_{pi |- a} L^l(pi) at L = p"""
    motive = commuting_motive(a)
    return _as_count(evaluate_at_prime(motive, p), motive)


def count_strata(query, workers=None):
    """Counts split by the invertible part of A2 + B2

    Returns
    -------
    buckets: dict
        a -> number of triples whose invertible part has
        dimension vector (a, a)
    """
    query.check_size()
    a0, a1 = query.alpha
    if a0 * a1 == 0:
        return {0: 1}
    _, buckets = _run_chunks(query.alpha, query.p, True, workers, None)
    return dict(sorted(buckets.items()))


def predicted_strata(alpha, p):
    """Stratum counts predicted by A_U = I(y0 y1) N(y0, y1)

    The stratum a contributes [GL_a]^2 I_a [R^N_beta] times the
    number of splittings of V0 and V1, with beta = alpha - (a, a)
    and [R^N_beta] = N_beta [GL_b0][GL_b1] (-q)^-(b0-b1)^2.
    """
    a0, a1 = alpha
    record = first_proof_series(max(a0 + a1, 1))
    buckets = {}
    for a in range(min(a0, a1) + 1):
        b0, b1 = a0 - a, a1 - a
        inv_part = gl_motive(a) ** 2 * record.I[(a, a)]
        nil_part = record.N[(b0, b1)] * gl_motive(b0) * gl_motive(b1) \
            * minus_q_power(-(b0 - b1) ** 2)
        split = gl_motive(a0) / (gl_motive(a) * gl_motive(b0)) \
            * gl_motive(a1) / (gl_motive(a) * gl_motive(b1))
        motive = inv_part * nil_part * split
        value = _as_count(evaluate_at_prime(motive, p), motive)
        if value:
            buckets[a] = value
    return buckets
