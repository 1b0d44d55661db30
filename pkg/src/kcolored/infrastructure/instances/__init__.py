"""Instance file storage"""
from .instance_repository import FileInstanceRepository, atomic_write_text

__all__ = ["FileInstanceRepository", "atomic_write_text"]
