from abc import ABC, abstractmethod

from ...types import Presentation


class IPresentationFormat(ABC):
    """Output formats turn a presentation into deterministic text.

    Implementations must not depend on anything but the presentation value, so equal presentations print identically.
    """
    @property
    @abstractmethod
    def name(self) -> str:
        """Returns the format name used on the command line. E.g. "dsl", "gap"."""
        pass

    @abstractmethod
    def serialize(self, p: Presentation) -> str:
        """Render a presentation.

        Args:
            p: The presentation to render

        Returns:
            The rendered text, ending in a newline

        Raises:
            SerializationError: If the format cannot express the presentation
        """
        pass
