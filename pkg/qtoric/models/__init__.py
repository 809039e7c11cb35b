"""Pydantic models for quasitoric data, input files and reports."""
