"""Bundled worked examples: networks, functions, codes and expected results.

These are the regression fixtures behind the ``examples`` CLI command
and the test suite.  Each builder returns fresh objects so callers can
mutate nothing shared.
"""

from .gf import FieldMatrix
from .netmodel import Network

# -- three-source weak-partition demo (three-layer, one middle node) ---------


def weak_partition_network():
    """Three sources behind one relay; source 3 has two parallel edges."""
    return Network(
        nodes=["s1", "s2", "s3", "u", "g"],
        edges=[
            ("e1_1", "s1", "u"),
            ("e2_1", "s2", "u"),
            ("e3_1", "s3", "u"),
            ("e3_2", "s3", "u"),
            ("e1", "u", "g"),
            ("e2", "u", "g"),
        ],
        sources=["s1", "s2", "s3"],
        sink="g",
    )


# -- two-source separation demo (sum target, identity security) --------------


def separation_network():
    """Two sources, seven edges; the triple bound is strictly tighter here."""
    return Network(
        nodes=["s1", "s2", "u", "g"],
        edges=[
            ("e1", "s1", "u"),
            ("e2", "s1", "u"),
            ("e3", "s1", "u"),
            ("e4", "s2", "u"),
            ("e5", "s2", "g"),
            ("e6", "s2", "g"),
            ("e7", "u", "g"),
        ],
        sources=["s1", "s2"],
        sink="g",
    )


def separation_functions(q=2):
    f = FieldMatrix(q, [[1], [1]])
    g = FieldMatrix.identity(q, 2)
    return f, g


# -- three-source leak demo over F_3 ------------------------------------------


def leak_demo_network():
    """Three sources, one relay; wiretap level 2 playground over F_3."""
    return Network(
        nodes=["s1", "s2", "s3", "u", "g"],
        edges=[
            ("e1", "s1", "u"),
            ("e2", "s2", "u"),
            ("e3", "s3", "u"),
            ("e4", "s3", "u"),
            ("e5", "u", "g"),
            ("e6", "u", "g"),
        ],
        sources=["s1", "s2", "s3"],
        sink="g",
    )


def leak_demo_functions():
    f = FieldMatrix(3, [[1], [1], [1]])
    g = FieldMatrix(3, [[1], [0], [1]])
    return f, g


# -- four-source sum instance (base code and its secured transform) -----------


def sum_example_network():
    """Four sources, four relays, twelve edges over F_5; every source min-cut is 2."""
    return Network(
        nodes=["s1", "s2", "s3", "s4", "u1", "u2", "u3", "u4", "g"],
        edges=[
            ("e1", "s1", "u1"),
            ("e2", "s1", "u2"),
            ("e3", "s2", "u2"),
            ("e4", "s2", "u3"),
            ("e5", "s3", "u3"),
            ("e6", "s3", "u4"),
            ("e7", "s4", "u1"),
            ("e8", "s4", "u4"),
            ("e9", "u1", "g"),
            ("e10", "u2", "g"),
            ("e11", "u3", "g"),
            ("e12", "u4", "g"),
        ],
        sources=["s1", "s2", "s3", "s4"],
        sink="g",
    )


def sum_example_functions():
    f = FieldMatrix(5, [[1], [1], [1], [1]])
    g = FieldMatrix(5, [[1, 0], [0, 1], [1, 1], [1, 0]])
    return f, g


SUM_EXAMPLE_RATE = 2

# global column vectors of the rate-2 non-secure base code (blocks of 2 per source)
SUM_EXAMPLE_BASE_GLOBALS = {
    "e1": (1, 0, 0, 0, 0, 0, 0, 0),
    "e2": (0, 1, 0, 0, 0, 0, 0, 0),
    "e3": (0, 0, -1, 1, 0, 0, 0, 0),
    "e4": (0, 0, 1, 0, 0, 0, 0, 0),
    "e5": (0, 0, 0, 0, 2, -1, 0, 0),
    "e6": (0, 0, 0, 0, -1, 1, 0, 0),
    "e7": (0, 0, 0, 0, 0, 0, 1, 2),
    "e8": (0, 0, 0, 0, 0, 0, 0, 3),
    "e9": (1, 0, 0, 0, 0, 0, 1, 2),
    "e10": (0, 1, -1, 1, 0, 0, 0, 0),
    "e11": (0, 0, 1, 0, 2, -1, 0, 0),
    "e12": (0, 0, 0, 0, -1, 1, 0, 3),
}

# columns chosen for the inverse of the mixing matrix, and the matrix itself
SUM_EXAMPLE_B_COLUMNS = ((1, 2), (0, 1))
SUM_EXAMPLE_B = ((1, 0), (-2, 1))

# global vectors after securing (one message row, one key row per source)
SUM_EXAMPLE_SECURE_GLOBALS = {
    "e1": (1, -2, 0, 0, 0, 0, 0, 0),
    "e2": (0, 1, 0, 0, 0, 0, 0, 0),
    "e3": (0, 0, -1, 3, 0, 0, 0, 0),
    "e4": (0, 0, 1, -2, 0, 0, 0, 0),
    "e5": (0, 0, 0, 0, 2, 0, 0, 0),
    "e6": (0, 0, 0, 0, -1, 3, 0, 0),
    "e7": (0, 0, 0, 0, 0, 0, 1, 0),
    "e8": (0, 0, 0, 0, 0, 0, 0, 3),
    "e9": (1, -2, 0, 0, 0, 0, 1, 0),
    "e10": (0, 1, -1, 3, 0, 0, 0, 0),
    "e11": (0, 0, 1, -2, 2, 0, 0, 0),
    "e12": (0, 0, 0, 0, -1, 3, 0, 3),
}

# sink decodes the sum as y9 + 2*y10 + 3*y11
SUM_EXAMPLE_DECODER_COMBO = {"e9": 1, "e10": 2, "e11": 3}

SUM_EXAMPLE_S_T = ((1, 0, 0, 0, 1, 0, 1, 0), (0, 0, 1, 0, 1, 0, 0, 0))

# relay wiring of the base code: each relay forwards the sum of its two inputs
SUM_EXAMPLE_RELAY_INPUTS = {
    "e9": ("e1", "e7"),
    "e10": ("e2", "e3"),
    "e11": ("e4", "e5"),
    "e12": ("e6", "e8"),
}


def sum_example_base_local():
    """Local coefficients of the rate-2 base code (relays add their inputs)."""
    from .codes import LocalCode

    q, l = 5, SUM_EXAMPLE_RATE
    source_coeffs = {}
    for e in ("e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"):
        col = SUM_EXAMPLE_BASE_GLOBALS[e]
        block = [c % q for c in col if True]
        # pick out this source's two rows (the only nonzero block)
        idx = next(i for i in range(4) if any(block[2 * i : 2 * i + 2]))
        a = FieldMatrix(q, [[block[2 * idx]], [block[2 * idx + 1]]], cols=1)
        b = FieldMatrix.zeros(q, 0, 1)
        source_coeffs[e] = (a, b)
    transfer = {}
    for out_edge, ins in SUM_EXAMPLE_RELAY_INPUTS.items():
        for d in ins:
            transfer[(d, out_edge)] = FieldMatrix.identity(q, 1)
    return LocalCode(q=q, l=l, n=1, z=(0, 0, 0, 0), source_coeffs=source_coeffs, transfer=transfer)


def sum_example_base_code():
    from .codes import code_from_columns

    net = sum_example_network()
    return code_from_columns(
        net, 5, SUM_EXAMPLE_RATE, 1, (0, 0, 0, 0), SUM_EXAMPLE_BASE_GLOBALS
    )


def sum_example_secure_code():
    from .codes import code_from_columns

    net = sum_example_network()
    return code_from_columns(net, 5, 1, 1, (1, 1, 1, 1), SUM_EXAMPLE_SECURE_GLOBALS)


def branch_network(v, alpha, prefix=""):
    """Single-relay branch: v sources, alpha parallel edges per connection."""
    nodes = [f"{prefix}s{i}" for i in range(1, v + 1)] + [f"{prefix}v", "g"]
    edges = []
    for i in range(1, v + 1):
        for k in range(1, alpha + 1):
            edges.append((f"{prefix}o{i}_{k}", f"{prefix}s{i}", f"{prefix}v"))
    for k in range(1, alpha + 1):
        edges.append((f"{prefix}d{k}", f"{prefix}v", "g"))
    return Network(
        nodes=nodes,
        edges=edges,
        sources=[f"{prefix}s{i}" for i in range(1, v + 1)],
        sink="g",
    )


# -- full-rate branch instance over F_7 ---------------------------------------


def full_rate_branch_functions():
    f = FieldMatrix(7, [[1, 0], [1, 1], [2, 1]])
    g = FieldMatrix(7, [[1], [0], [1]])
    return f, g


# message half of the sink-side encoding accepted for the full-rate branch
FULL_RATE_BRANCH_H_IN_M = (
    (1, 0, 0, 0, 0, 1),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1),
    (1, 1, 0, 0, 0, 1),
    (0, 1, 1, 1, 0, 0),
    (0, 0, 1, 0, 1, 1),
    (2, 1, 0, 0, 0, 2),
    (0, 1, 2, 1, 0, 0),
    (0, 0, 1, 0, 1, 2),
)

# per-source encoding block of the full-rate branch (messages over keys)
FULL_RATE_BRANCH_H_OUT = (
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (1, 1, 1, 1, 1, 1),
    (1, 2, 3, 4, 5, 6),
)


# -- reduced-rate branch instance over F_1297 ----------------------------------

REDUCED_RATE_Q = 1297


def reduced_rate_branch_functions():
    f = FieldMatrix(REDUCED_RATE_Q, [[1, 2, 0], [2, 1, 2], [0, 1, 1]])
    g = FieldMatrix(REDUCED_RATE_Q, [[1, 2], [2, 1], [0, 1]])
    return f, g


# per-source encoding block (one message row atop a key Vandermonde block);
# published with 384 where the Vandermonde recipe gives 4**4 = 256, so the
# verifier must accept the recipe matrix and the published variant alike
REDUCED_RATE_H_OUT_PUBLISHED = (
    (1, 0, 0, 0, 0, 0),
    (1, 1, 1, 1, 1, 1),
    (1, 2, 3, 4, 5, 6),
    (1, 4, 9, 16, 25, 36),
    (1, 8, 27, 64, 125, 216),
    (1, 16, 81, 384, 625, 1296),
)

REDUCED_RATE_H_OUT_RECIPE = (
    (1, 0, 0, 0, 0, 0),
    (1, 1, 1, 1, 1, 1),
    (1, 2, 3, 4, 5, 6),
    (1, 4, 9, 16, 25, 36),
    (1, 8, 27, 64, 125, 216),
    (1, 16, 81, 256, 625, 1296),
)

# key-recombination pattern: relay adds the j-th key of every source
REDUCED_RATE_U_T = (
    (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0),
)

REDUCED_RATE_D = (
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 1),
    (1, 0, 0, 8, 9, 10),
    (0, 1, 0, 64, 81, 100),
    (0, 0, 1, 512, 729, 1000),
)


# -- two-branch tree over F_5 --------------------------------------------------


def tree_example_spec():
    from .treesec import TreeSpec

    f = FieldMatrix(5, [[1, 2], [1, 2], [1, 3], [1, 3]])
    g = FieldMatrix(5, [[1], [1], [1], [1]])
    return TreeSpec(branches=2, sources_per_branch=2, multiplicity=2, q=5, F=f, G=g)


def tree_example_handcrafted_globals():
    """Rate-2 code on the two-branch tree, secure at wiretap level 2.

    Sources forward plain message symbols; each relay emits its branch
    partial sums mixed so that no sink-side column of one branch is
    parallel to a column of the other.
    """
    cols = {
        "o1_1_1": (1, 0, 0, 0, 0, 0, 0, 0),
        "o1_1_2": (0, 1, 0, 0, 0, 0, 0, 0),
        "o1_2_1": (0, 0, 1, 0, 0, 0, 0, 0),
        "o1_2_2": (0, 0, 0, 1, 0, 0, 0, 0),
        "o2_1_1": (0, 0, 0, 0, 1, 0, 0, 0),
        "o2_1_2": (0, 0, 0, 0, 0, 1, 0, 0),
        "o2_2_1": (0, 0, 0, 0, 0, 0, 1, 0),
        "o2_2_2": (0, 0, 0, 0, 0, 0, 0, 1),
        "d1_1": (1, 0, 1, 0, 0, 0, 0, 0),
        "d1_2": (0, 1, 0, 1, 0, 0, 0, 0),
        "d2_1": (0, 0, 0, 0, 1, 1, 1, 1),
        "d2_2": (0, 0, 0, 0, 1, 2, 1, 2),
    }
    return cols
