"""Named matrices used by the tests, the acceptance suite and ``gkzkit analyze --fixture``."""

from .lattice import validate, with_saturation
from .linalg import kernel_basis

FIXTURES = {
    "kummer": [[1, 0, 1], [0, 1, 1]],
    "m0134": [[1, 1, 1, 1], [0, 1, 3, 4]],
    "fourslopes": [[1, 0, 1, 2], [0, 1, 1, 3]],
    "identity2": [[1, 0], [0, 1]],
    "identity3": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "f21": [[1, 1, 1, 1], [1, 0, 0, 1], [0, 1, 0, 1]],
    "c012": [[1, 1, 1], [0, 1, 2]],
    "cubic": [[1, 1, 1, 1], [0, 1, 2, 3]],
    "sres": [[-1, 0, 1, 2], [1, 1, 1, 1]],
    "segment": [[1, 2]],
    # kernel Z(1, 1, 1, -1, -2): toric ideal generated by d1 d2 d3 - d4 d5^2
    "join": [list(r) for r in kernel_basis([[1, 1, 1, -1, -2]])],
}


def fixture(name):
    """Validated GkzMatrix with the saturation flag filled in."""
    return with_saturation(validate(FIXTURES[name]))


def corpus():
    return {name: fixture(name) for name in sorted(FIXTURES)}
