// implemented in a later milestone
