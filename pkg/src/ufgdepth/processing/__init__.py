"""Input validation and ingestion."""
