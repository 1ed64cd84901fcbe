"""Command line front end and acceptance suite."""
