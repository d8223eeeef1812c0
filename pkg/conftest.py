"""Anchors pytest at the repo root so tests can import helpers from tests.*."""
