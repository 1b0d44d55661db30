"""Test suite for trading system"""

