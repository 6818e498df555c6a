"""Exhaustive information-theoretic verifier.

Entropies and mutual informations are computed by enumerating the full
uniform (message, key) space and counting outcomes, never by rank
arguments, so this module is an independent cross-check of every
algebraic criterion.  Counts of linear images are powers of q, which
lets all results stay exact rationals in base-q units; anything else
falls back to floats.
"""

from fractions import Fraction

import numpy as np

from .errors import TooLarge
from .gf import FieldMatrix, kronecker
from .netmodel import enumerate_wiretap_sets

DEFAULT_STATE_CAP = 5 ** 8


class Selection:
    """A tuple of observed symbols: the state row vector times a matrix."""

    __slots__ = ("matrix", "label")

    def __init__(self, matrix, label=""):
        self.matrix = matrix
        self.label = label


def sel_edges(code, edge_set, label=None):
    return Selection(code.stack(edge_set), label or f"Y{sorted(edge_set)}")


def sel_messages(code):
    rows = code.message_row_indices()
    m = FieldMatrix.identity(code.q, code.total_rows).take_cols(rows)
    return Selection(m, "M")


def sel_linear(code, p, label="P"):
    """Observation m @ (p kron I_l) as a function of the packed state."""
    from .codes import security_matrix

    return Selection(security_matrix(p, code.l, code.z).matrix, label)


def sel_security(code, g):
    return sel_linear(code, g, "g(M)")


def sel_target(code, f):
    return sel_linear(code, f, "f(M)")


def joint(*selections):
    mats = [s.matrix for s in selections]
    base = mats[0]
    if len(mats) > 1:
        base = base.hstack(*mats[1:])
    return Selection(base, ",".join(s.label for s in selections))


def state_count(code):
    return code.q ** code.total_rows


def _check_cap(code, cap):
    n = state_count(code)
    if n > cap:
        raise TooLarge(f"state space {n} exceeds cap {cap}")
    return n


def _state_matrix(code):
    """All q**N states as an (q**N, N) int array, last coordinate fastest."""
    q, n = code.q, code.total_rows
    total = q ** n
    idx = np.arange(total)
    cols = []
    for pos in range(n - 1, -1, -1):
        cols.append((idx // (q ** (n - 1 - pos))) % q)
    return np.stack(list(reversed(cols)), axis=1)


def _apply(states, sel, q):
    m = sel.matrix
    if m.cols == 0:
        return np.zeros((states.shape[0], 0), dtype=np.int64)
    arr = np.array(m.data, dtype=np.int64)
    return (states @ arr) % q


def _outcome_counts(values, q):
    """Multiplicity of each distinct row of the observation array."""
    if values.shape[1] == 0:
        return np.array([values.shape[0]])
    width = values.shape[1]
    # radix-encode rows when they fit in 63 bits, else lexicographic unique
    if width * np.log2(q) < 62:
        radix = q ** np.arange(width - 1, -1, -1, dtype=np.int64)
        codes = values @ radix
        _, counts = np.unique(codes, return_counts=True)
    else:
        _, counts = np.unique(values, axis=0, return_counts=True)
    return counts


def _exact_log_q(value, q):
    """log_q(value) as an int when value is a power of q, else None."""
    if value <= 0:
        return None
    k = 0
    while value % q == 0:
        value //= q
        k += 1
    return k if value == 1 else None


def entropy_from_counts(counts, q):
    """Shannon entropy in base-q units from exact outcome counts."""
    total = int(counts.sum())
    log_total = _exact_log_q(total, q)
    terms_exact = True
    acc = Fraction(0)
    for c in counts:
        c = int(c)
        lc = _exact_log_q(c, q)
        if lc is None or log_total is None:
            terms_exact = False
            break
        acc += Fraction(c, total) * (log_total - lc)
    if terms_exact:
        return acc
    import math

    total_f = float(total)
    return sum(-(c / total_f) * math.log(c / total_f, q) for c in counts)


def entropy(code, selection, cap=DEFAULT_STATE_CAP):
    """Exact entropy of a selection under uniform messages and keys."""
    _check_cap(code, cap)
    states = _state_matrix(code)
    values = _apply(states, selection, code.q)
    return entropy_from_counts(_outcome_counts(values, code.q), code.q)


def mutual_information(code, sel_a, sel_b, cap=DEFAULT_STATE_CAP):
    """I(A; B) = H(A) + H(B) - H(A, B), exact whenever the parts are."""
    _check_cap(code, cap)
    states = _state_matrix(code)
    q = code.q
    va = _apply(states, sel_a, q)
    vb = _apply(states, sel_b, q)
    ha = entropy_from_counts(_outcome_counts(va, q), q)
    hb = entropy_from_counts(_outcome_counts(vb, q), q)
    hab = entropy_from_counts(_outcome_counts(np.concatenate([va, vb], axis=1), q), q)
    return ha + hb - hab


def verify_security_exact(code, g, wiretaps=None, r=None, cap=DEFAULT_STATE_CAP):
    """Exact leakage I(Y_W; g(M)) for every wiretap set.

    Returns ``(secure, leaks)`` where leaks maps each set to its exact
    mutual information.
    """
    _check_cap(code, cap)
    if wiretaps is None:
        if r is None:
            raise ValueError("need wiretaps or r")
        wiretaps = enumerate_wiretap_sets(code.net, r)
    states = _state_matrix(code)
    q = code.q
    vg = _apply(states, sel_security(code, g), q)
    hg = entropy_from_counts(_outcome_counts(vg, q), q)
    leaks = {}
    for w in wiretaps:
        vw = _apply(states, sel_edges(code, w), q)
        hw = entropy_from_counts(_outcome_counts(vw, q), q)
        hjoint = entropy_from_counts(
            _outcome_counts(np.concatenate([vw, vg], axis=1), q), q
        )
        leaks[frozenset(w)] = hw + hg - hjoint
    return all(v == 0 for v in leaks.values()), leaks


def verify_decodability_exact(code, f, cap=DEFAULT_STATE_CAP):
    """True iff the target is constant on every fiber of the sink view."""
    _check_cap(code, cap)
    states = _state_matrix(code)
    q = code.q
    sink_view = _apply(states, sel_edges(code, code.net.in_edges[code.net.sink]), q)
    target = _apply(states, sel_target(code, f), q)
    n_views = len(_outcome_counts(sink_view, q))
    n_pairs = len(_outcome_counts(np.concatenate([sink_view, target], axis=1), q))
    return n_pairs == n_views
