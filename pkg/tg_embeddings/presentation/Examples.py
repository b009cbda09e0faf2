from typing import NamedTuple

from .. import errors as err
from ..types import EmbedMode, Presentation
from .PresentationParser import parse


"""Built-in source presentations: the free abelian group of countable rank, the rationals, the Prüfer p-group and
finite cyclic groups."""
ZINF_SOURCE = """\
# free abelian group of countable rank
gens a[i] for i >= 1;
attrs torsion_free;
rels [a[k], a[l]] for k,l >= 1;
"""

Q_SOURCE = """\
# additive rationals, a[s] standing for 1/s!
gens a[i] for i >= 1;
attrs torsion_free;
rels a[s]^s = a[s-1] for s >= 2;
"""

PRUFER_SOURCE = """\
# Prüfer p-group, a[s] of order p^s
let p = 2;
gens a[i] for i >= 1;
rels a[1]^p;
rels a[s]^p = a[s-1] for s >= 2;
"""

CYCLIC_SOURCE = """\
let n = 2;
gens a[i] for i in 1..1;
rels a[1]^n;
"""


# Structs
class Example(NamedTuple):
    name: str
    source: str
    mode: EmbedMode


EXAMPLES: dict[str, Example] = {
    "zinf": Example("zinf", ZINF_SOURCE, EmbedMode.TORSION_FREE),
    "Q": Example("Q", Q_SOURCE, EmbedMode.TORSION_FREE),
    "prufer": Example("prufer", PRUFER_SOURCE, EmbedMode.GENERAL),
}


def example(name: str, p: int | None = None) -> Presentation:
    """Parse a built-in example.

    Args:
        name: One of `zinf`, `Q`, `prufer`
        p: The prime of the Prüfer example, 2 when omitted

    Raises:
        PresentationError: If the name is unknown
    """
    if name not in EXAMPLES:
        raise err.PresentationError(f"{err.GOLDEN_UNKNOWN_EXAMPLE}: {name}")
    return parse(EXAMPLES[name].source, None if p is None else {"p": p})


def cyclic(n: int) -> Presentation:
    """The cyclic group of order n on the single generator a[1]."""
    return parse(CYCLIC_SOURCE, {"n": n})
