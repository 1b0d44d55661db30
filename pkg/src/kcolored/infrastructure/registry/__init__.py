"""Registry infrastructure for persistent storage of command reports"""
from .reports_repository import ReportsRepository

__all__ = ["ReportsRepository"]
