"""Experiment drivers, configuration and command line."""
