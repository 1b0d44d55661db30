"""Domain layer tests"""

