"""
Monochromatic Components
Covers and partitions of edge-coloured graphs by monochromatic connected sets
"""

__version__ = "1.0.0"

from .analysis_system import MonoAnalysisSystem, AnalysisResult, create_analysis_system
from .config import Settings, get_settings

__all__ = ['MonoAnalysisSystem', 'AnalysisResult', 'create_analysis_system', 'Settings', 'get_settings',
           '__version__']
