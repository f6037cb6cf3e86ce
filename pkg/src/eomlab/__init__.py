"""eomlab: electro-optomechanical transducer simulator and virtual lab."""
import logging

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())
