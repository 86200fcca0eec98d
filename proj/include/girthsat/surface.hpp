#pragma once

namespace girthsat {

// A closed surface: sphere with g handles (orientable) or g crosscaps.
struct SurfaceClass {
  bool orientable = true;
  int genus = 0;

  int euler_genus() const { return orientable ? 2 * genus : genus; }

  static SurfaceClass sphere() { return {true, 0}; }
  static SurfaceClass orientable_genus(int g) { return {true, g}; }
  static SurfaceClass nonorientable_genus(int g) { return {false, g}; }

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

}  // namespace girthsat
