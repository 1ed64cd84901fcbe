"""Logging, configuration and text/JSON codecs."""
