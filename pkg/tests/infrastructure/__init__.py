# -*- coding: utf-8__
"""Infrastructure layer tests"""

