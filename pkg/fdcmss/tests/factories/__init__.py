"""The factories module
"""
from .models import *
