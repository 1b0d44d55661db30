# -*- coding: utf-8__
"""Integration tests for the trading system"""

