from . import Embedder, ReferenceFamilies, UniversalWords
from .Embedder import EmbeddingResult, embed, embed_schema

__all__ = ["Embedder", "EmbeddingResult", "ReferenceFamilies", "UniversalWords", "embed", "embed_schema"]
