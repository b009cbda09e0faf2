__all__ = ["AffineLib", "Events", "SchemaWordLib", "WordFormat", "WordLib"]
