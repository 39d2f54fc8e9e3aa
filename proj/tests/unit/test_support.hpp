#pragma once

#include "jade/jade.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

inline std::string fixtures_dir() { return JADE_FIXTURES_DIR; }

inline std::string fixture_path(const std::string& relative) {
    return (std::filesystem::path(JADE_FIXTURES_DIR) / relative).string();
}

inline std::string read_fixture(const std::string& relative) {
    return jade::read_text_file(fixture_path(relative));
}

inline jade::SkillLibrary load_test_library() {
    return jade::SkillLibrary::load_file(fixture_path("skills/bizbench_skills.json"),
                                         jade::Taxonomy::standard());
}

/// Unique scratch directory under the build tree.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "jade_tests" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace testutil
