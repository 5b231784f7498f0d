"""Sorting with a pattern-avoiding stack followed by an increasing stack."""

from .perms import Permutation, parse, contains, avoids, inflate, ltr_maxima, deflate_leading_run, symmetry
from .machine import run_machine, first_pass, is_sortable, stacksort, can_push, MachineTrace

__version__ = "0.1.0"
