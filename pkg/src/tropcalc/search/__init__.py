from .window_scanner import WindowScanner

__all__ = ["WindowScanner"]
