"""Doomsday Engine - day-of-week calculation with interchangeable doomsyear methods."""
