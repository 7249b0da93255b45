"""Exact analysis of synchronizing and circular automata."""
