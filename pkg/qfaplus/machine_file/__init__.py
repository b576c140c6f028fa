"""Machine files: self-describing json serialization of every machine kind."""
