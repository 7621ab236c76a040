"""The sketch module
"""
from .base import *
