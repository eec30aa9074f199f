/* Regenerates the shipped model files from the built-in corpus builders. */

#include <filesystem>
#include <fstream>
#include <iostream>

#include "ainf/corpus.hpp"

int main(int argc, char** argv)
{
    std::filesystem::path dir = argc > 1 ? argv[1] : "models";
    std::filesystem::create_directories(dir);
    for (const ainf::Model& m : ainf::corpus::all()) {
        std::filesystem::path path = dir / (m.name + ".json");
        std::ofstream out(path);
        out << ainf::emit_model(m);
        std::cout << path.string() << "\n";
    }
    return 0;
}
