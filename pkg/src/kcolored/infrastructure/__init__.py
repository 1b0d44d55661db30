"""Infrastructure adapters: logging, instance files, report registry"""
