"""Static symmetric-group character tables for n <= 5, used by the classical
alpha = 1 consistency checks.  Test fixture data (generated offline with a
border-strip recursion and verified against column orthogonality), not
engine output.

CHARACTERS[lam][rho] is the irreducible character indexed by lam evaluated on
the conjugacy class of cycle type rho.
"""

CHARACTERS = {
    (1,): {(1,): 1},
    (2,): {(2,): 1, (1, 1): 1},
    (1, 1): {(2,): -1, (1, 1): 1},
    (3,): {(3,): 1, (2, 1): 1, (1, 1, 1): 1},
    (2, 1): {(3,): -1, (2, 1): 0, (1, 1, 1): 2},
    (1, 1, 1): {(3,): 1, (2, 1): -1, (1, 1, 1): 1},
    (4,): {(4,): 1, (3, 1): 1, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1},
    (3, 1): {(4,): -1, (3, 1): 0, (2, 2): -1, (2, 1, 1): 1, (1, 1, 1, 1): 3},
    (2, 2): {(4,): 0, (3, 1): -1, (2, 2): 2, (2, 1, 1): 0, (1, 1, 1, 1): 2},
    (2, 1, 1): {(4,): 1, (3, 1): 0, (2, 2): -1, (2, 1, 1): -1, (1, 1, 1, 1): 3},
    (1, 1, 1, 1): {(4,): -1, (3, 1): 1, (2, 2): 1, (2, 1, 1): -1, (1, 1, 1, 1): 1},
    (5,): {
        (5,): 1, (4, 1): 1, (3, 2): 1, (3, 1, 1): 1,
        (2, 2, 1): 1, (2, 1, 1, 1): 1, (1, 1, 1, 1, 1): 1,
    },
    (4, 1): {
        (5,): -1, (4, 1): 0, (3, 2): -1, (3, 1, 1): 1,
        (2, 2, 1): 0, (2, 1, 1, 1): 2, (1, 1, 1, 1, 1): 4,
    },
    (3, 2): {
        (5,): 0, (4, 1): -1, (3, 2): 1, (3, 1, 1): -1,
        (2, 2, 1): 1, (2, 1, 1, 1): 1, (1, 1, 1, 1, 1): 5,
    },
    (3, 1, 1): {
        (5,): 1, (4, 1): 0, (3, 2): 0, (3, 1, 1): 0,
        (2, 2, 1): -2, (2, 1, 1, 1): 0, (1, 1, 1, 1, 1): 6,
    },
    (2, 2, 1): {
        (5,): 0, (4, 1): 1, (3, 2): -1, (3, 1, 1): -1,
        (2, 2, 1): 1, (2, 1, 1, 1): -1, (1, 1, 1, 1, 1): 5,
    },
    (2, 1, 1, 1): {
        (5,): -1, (4, 1): 0, (3, 2): 1, (3, 1, 1): 1,
        (2, 2, 1): 0, (2, 1, 1, 1): -2, (1, 1, 1, 1, 1): 4,
    },
    (1, 1, 1, 1, 1): {
        (5,): 1, (4, 1): -1, (3, 2): -1, (3, 1, 1): 1,
        (2, 2, 1): 1, (2, 1, 1, 1): -1, (1, 1, 1, 1, 1): 1,
    },
}
