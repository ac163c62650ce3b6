"""
CatCheck Modules

Executable categorical constructions on finite instances: monoidal
categories, operator categories, Hopf algebras, nerves and the interchange
checks. The modules are imported flat; catcheck.py puts this directory on
sys.path.
"""

__version__ = "1.0.0"
