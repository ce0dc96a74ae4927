// Regenerates the checked-in catalog data files from their closed forms.
//
//   ybt-gen-catalog <dir>
//
// Every entry is validated before it is written.

#include "ybt/catalog.hpp"

#include <filesystem>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <output-dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    try {
        std::filesystem::create_directories(dir);
        for (const auto& name : ybt::catalog::list()) {
            const auto entry = ybt::catalog::build(name);
            ybt::catalog::validate(entry);
            const auto path = dir / (name + ".json");
            ybt::io::write_json_file(path, ybt::catalog::to_json(entry));
            std::cerr << "wrote " << path.string() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
