#ifndef UMEMURA_UMEMURA_HPP
#define UMEMURA_UMEMURA_HPP

#include <umemura/calculus.hpp>
#include <umemura/combinat.hpp>
#include <umemura/families.hpp>
#include <umemura/identities.hpp>
#include <umemura/mpoly.hpp>
#include <umemura/painleve.hpp>
#include <umemura/rational.hpp>
#include <umemura/resolve.hpp>
#include <umemura/serialize.hpp>
#include <umemura/urat.hpp>

#endif
