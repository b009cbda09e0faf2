from . import Examples, Presentation, PresentationParser, PresentationSerializer
from .Presentation import instantiate
from .PresentationParser import parse, parse_word
from .PresentationSerializer import serialize

__all__ = [
    "interfaces",
    "Examples",
    "Presentation",
    "PresentationParser",
    "PresentationSerializer",
    "instantiate",
    "parse",
    "parse_word",
    "serialize",
]
