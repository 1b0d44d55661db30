"""Port interfaces for instance storage"""
from abc import ABC, abstractmethod
from pathlib import Path

from .messages import InstanceFile


class InstanceRepositoryPort(ABC):
    """Port for reading and writing instance files"""

    @abstractmethod
    def load(self, path: Path | str) -> InstanceFile:
        """Read and validate an instance"""
        raise NotImplementedError

    @abstractmethod
    def save(self, instance: InstanceFile, path: Path | str) -> Path:
        """Write an instance atomically, returning the final path"""
        raise NotImplementedError

    @abstractmethod
    def parse(self, text: str) -> InstanceFile:
        """Parse instance text"""
        raise NotImplementedError

    @abstractmethod
    def serialize(self, instance: InstanceFile) -> str:
        """Render an instance in the canonical text format"""
        raise NotImplementedError
