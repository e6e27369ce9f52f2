#pragma once

// Field snapshots on disk.
//
// Binary layout (little-endian):
//   char[4] "FGRD", u32 version (1), u32 n, u32 N, f64 L, u32 offset, u32 components,
//   then components * N^n doubles, component-major, each component row-major.
// Files ending in ".csv" use a text table instead (n = 1 only): x,value or x,c0,c1,...

#include "fracgrad/field.hpp"

#include <string>

namespace fracgrad {

/// Writes a one-or-more component field. Throws StructuralError on CSV with n != 1,
/// std::runtime_error on I/O failure.
void write_field(const std::string& path, const VectorField& field);
void write_field(const std::string& path, const ScalarField& field);

/// Reads a field written by write_field. For CSV the grid is inferred from the x column.
VectorField read_field(const std::string& path);

}  // namespace fracgrad
