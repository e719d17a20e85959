"""Command-line flows run end to end on temporary files."""
