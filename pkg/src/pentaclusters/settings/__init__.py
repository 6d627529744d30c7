# settings package
