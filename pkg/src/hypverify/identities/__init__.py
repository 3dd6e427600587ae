"""Identity files shipped with the package."""

from importlib import resources


def shipped_path(name: str):
    """Traversable for a bundled ``.hvd`` file, or None if there is none."""
    ref = resources.files(__name__) / name
    return ref if ref.is_file() else None
