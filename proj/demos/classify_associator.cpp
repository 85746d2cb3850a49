// Classifies the worked examples on a few spin factors and prints the
// witnesses the classifier found.

#include <iostream>

#include "jnpoly/jnpoly.hpp"

using namespace jnpoly;

namespace {

void show(const std::string& name, const Polynomial& p, int n) {
    const ClassificationReport report = classify_image(p, n);
    std::cout << name << " on J_" << n << ": image = "
              << image_class_name(report.image_class) << " ("
              << report.tuples_examined << " basis tuples)\n";
    if (report.real_witness) {
        std::cout << "  real witness:  p(";
        for (size_t i = 0; i < report.real_witness->tuple.size(); ++i) {
            std::cout << (i ? ", " : "") << "e" << report.real_witness->tuple[i];
        }
        std::cout << ") = " << report.real_witness->value.to_text() << "\n";
    }
    if (report.pure_witness) {
        std::cout << "  pure witness:  p(";
        for (size_t i = 0; i < report.pure_witness->tuple.size(); ++i) {
            std::cout << (i ? ", " : "") << "e" << report.pure_witness->tuple[i];
        }
        std::cout << ") = " << report.pure_witness->value.to_text() << "\n";
    }
}

}  // namespace

int main() {
    const Polynomial assoc = associator_polynomial();
    std::cout << "associator: " << assoc.render() << "\n\n";

    for (int n : {3, 4, 6, 10}) show("associator", assoc, n);
    std::cout << "\n";

    show("associator o associator", central_example(3).first, 3);
    show("nested degree-8 identity", pi_example(3).first, 3);
    show("x1", Polynomial::variable(1), 3);
    show("x1*x2", Polynomial::variable(1) * Polynomial::variable(2), 3);
    return 0;
}
