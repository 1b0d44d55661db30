# -*- coding: utf-8__
"""Logging infrastructure tests"""

