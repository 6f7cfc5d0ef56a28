#pragma once

#include <filesystem>
#include <string>

#include "symprime/scan.hpp"

namespace symprime {

std::string checkpoint_to_json(const ScanCheckpoint& cp);

/// Throws CheckpointError on malformed or inconsistent input.
ScanCheckpoint checkpoint_from_json(const std::string& text);

/// Atomic replace: write to a sibling temp file, flush to disk, rename.
void save_checkpoint(const std::filesystem::path& path,
                     const ScanCheckpoint& cp);

/// Throws CheckpointError when the file is unreadable or corrupt.
ScanCheckpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace symprime
