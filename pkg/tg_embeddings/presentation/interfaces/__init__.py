from .IPresentationFormat import IPresentationFormat

__all__ = ["IPresentationFormat"]
