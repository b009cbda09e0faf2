__all__ = ["cli", "constants", "embedder", "errors", "library", "presentation", "types", "verifier"]
