// Generated by tools/gen_catalog. Do not edit by hand.
#include "catalog_data.h"

namespace rupert {
namespace {
const char* const k_tetrahedron[] = {
    "0", "1", "-0.35355339059327376220042218105242451964241796884424",
    "0.86602540378443864676372317075293618347140262690519", "-0.5", "-0.35355339059327376220042218105242451964241796884424",
    "-0.86602540378443864676372317075293618347140262690519", "-0.5", "-0.35355339059327376220042218105242451964241796884424",
    "0", "0", "1.0606601717798212866012665431572735589272539065327",
};
const char* const k_cube[] = {
    "1", "1", "1",
    "1", "1", "-1",
    "1", "-1", "1",
    "1", "-1", "-1",
    "-1", "1", "1",
    "-1", "1", "-1",
    "-1", "-1", "1",
    "-1", "-1", "-1",
};
const char* const k_octahedron[] = {
    "1", "0", "0",
    "0", "1", "0",
    "0", "0", "1",
    "-1", "0", "0",
    "0", "-1", "0",
    "0", "0", "-1",
};
const char* const k_dodecahedron[] = {
    "1", "1", "1",
    "1", "1", "-1",
    "1", "-1", "1",
    "1", "-1", "-1",
    "-1", "1", "1",
    "-1", "1", "-1",
    "-1", "-1", "1",
    "-1", "-1", "-1",
    "0", "0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058", "0",
    "1.6180339887498948482045868343656381177203091798058", "0", "0.61803398874989484820458683436563811772030917980576",
    "0", "0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058", "0",
    "-1.6180339887498948482045868343656381177203091798058", "0", "0.61803398874989484820458683436563811772030917980576",
    "0", "-0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058", "0",
    "1.6180339887498948482045868343656381177203091798058", "0", "-0.61803398874989484820458683436563811772030917980576",
    "0", "-0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058", "0",
    "-1.6180339887498948482045868343656381177203091798058", "0", "-0.61803398874989484820458683436563811772030917980576",
};
const char* const k_icosahedron[] = {
    "0", "1", "1.6180339887498948482045868343656381177203091798058",
    "1", "1.6180339887498948482045868343656381177203091798058", "0",
    "1.6180339887498948482045868343656381177203091798058", "0", "1",
    "0", "1", "-1.6180339887498948482045868343656381177203091798058",
    "1", "-1.6180339887498948482045868343656381177203091798058", "0",
    "-1.6180339887498948482045868343656381177203091798058", "0", "1",
    "0", "-1", "1.6180339887498948482045868343656381177203091798058",
    "-1", "1.6180339887498948482045868343656381177203091798058", "0",
    "1.6180339887498948482045868343656381177203091798058", "0", "-1",
    "0", "-1", "-1.6180339887498948482045868343656381177203091798058",
    "-1", "-1.6180339887498948482045868343656381177203091798058", "0",
    "-1.6180339887498948482045868343656381177203091798058", "0", "-1",
};
const char* const k_truncated_tetrahedron[] = {
    "1.0606601717798212866012665431572735589272539065327", "0.35355339059327376220042218105242451964241796884424", "0.35355339059327376220042218105242451964241796884424",
    "0.35355339059327376220042218105242451964241796884424", "0.35355339059327376220042218105242451964241796884424", "1.0606601717798212866012665431572735589272539065327",
    "0.35355339059327376220042218105242451964241796884424", "1.0606601717798212866012665431572735589272539065327", "0.35355339059327376220042218105242451964241796884424",
    "1.0606601717798212866012665431572735589272539065327", "-0.35355339059327376220042218105242451964241796884424", "-0.35355339059327376220042218105242451964241796884424",
    "-0.35355339059327376220042218105242451964241796884424", "-0.35355339059327376220042218105242451964241796884424", "1.0606601717798212866012665431572735589272539065327",
    "-0.35355339059327376220042218105242451964241796884424", "1.0606601717798212866012665431572735589272539065327", "-0.35355339059327376220042218105242451964241796884424",
    "-1.0606601717798212866012665431572735589272539065327", "0.35355339059327376220042218105242451964241796884424", "-0.35355339059327376220042218105242451964241796884424",
    "0.35355339059327376220042218105242451964241796884424", "-0.35355339059327376220042218105242451964241796884424", "-1.0606601717798212866012665431572735589272539065327",
    "-0.35355339059327376220042218105242451964241796884424", "-1.0606601717798212866012665431572735589272539065327", "0.35355339059327376220042218105242451964241796884424",
    "-1.0606601717798212866012665431572735589272539065327", "-0.35355339059327376220042218105242451964241796884424", "0.35355339059327376220042218105242451964241796884424",
    "0.35355339059327376220042218105242451964241796884424", "-1.0606601717798212866012665431572735589272539065327", "-0.35355339059327376220042218105242451964241796884424",
    "-0.35355339059327376220042218105242451964241796884424", "0.35355339059327376220042218105242451964241796884424", "-1.0606601717798212866012665431572735589272539065327",
};
const char* const k_cuboctahedron[] = {
    "1", "1", "0",
    "1", "0", "1",
    "0", "1", "1",
    "1", "-1", "0",
    "-1", "0", "1",
    "0", "1", "-1",
    "1", "0", "-1",
    "-1", "1", "0",
    "0", "-1", "1",
    "-1", "-1", "0",
    "-1", "0", "-1",
    "0", "-1", "-1",
};
const char* const k_truncated_cube[] = {
    "0.41421356237309504880168872420969807856967187537695", "1", "1",
    "1", "1", "0.41421356237309504880168872420969807856967187537695",
    "1", "0.41421356237309504880168872420969807856967187537695", "1",
    "0.41421356237309504880168872420969807856967187537695", "1", "-1",
    "1", "-1", "0.41421356237309504880168872420969807856967187537695",
    "-1", "0.41421356237309504880168872420969807856967187537695", "1",
    "0.41421356237309504880168872420969807856967187537695", "-1", "1",
    "1", "0.41421356237309504880168872420969807856967187537695", "-1",
    "-1", "1", "0.41421356237309504880168872420969807856967187537695",
    "0.41421356237309504880168872420969807856967187537695", "-1", "-1",
    "-1", "-1", "0.41421356237309504880168872420969807856967187537695",
    "-1", "0.41421356237309504880168872420969807856967187537695", "-1",
    "-0.41421356237309504880168872420969807856967187537695", "1", "1",
    "1", "1", "-0.41421356237309504880168872420969807856967187537695",
    "1", "-0.41421356237309504880168872420969807856967187537695", "1",
    "-0.41421356237309504880168872420969807856967187537695", "1", "-1",
    "1", "-1", "-0.41421356237309504880168872420969807856967187537695",
    "-1", "-0.41421356237309504880168872420969807856967187537695", "1",
    "-0.41421356237309504880168872420969807856967187537695", "-1", "1",
    "1", "-0.41421356237309504880168872420969807856967187537695", "-1",
    "-1", "1", "-0.41421356237309504880168872420969807856967187537695",
    "-0.41421356237309504880168872420969807856967187537695", "-1", "-1",
    "-1", "-1", "-0.41421356237309504880168872420969807856967187537695",
    "-1", "-0.41421356237309504880168872420969807856967187537695", "-1",
};
const char* const k_truncated_octahedron[] = {
    "0", "1", "2",
    "1", "2", "0",
    "2", "0", "1",
    "0", "2", "1",
    "1", "0", "2",
    "2", "1", "0",
    "0", "1", "-2",
    "1", "-2", "0",
    "-2", "0", "1",
    "0", "-2", "1",
    "1", "0", "-2",
    "-2", "1", "0",
    "0", "-1", "2",
    "-1", "2", "0",
    "2", "0", "-1",
    "0", "2", "-1",
    "-1", "0", "2",
    "2", "-1", "0",
    "0", "-1", "-2",
    "-1", "-2", "0",
    "-2", "0", "-1",
    "0", "-2", "-1",
    "-1", "0", "-2",
    "-2", "-1", "0",
};
const char* const k_rhombicuboctahedron[] = {
    "1", "1", "2.4142135623730950488016887242096980785696718753769",
    "1", "2.4142135623730950488016887242096980785696718753769", "1",
    "2.4142135623730950488016887242096980785696718753769", "1", "1",
    "1", "1", "-2.4142135623730950488016887242096980785696718753769",
    "1", "-2.4142135623730950488016887242096980785696718753769", "1",
    "-2.4142135623730950488016887242096980785696718753769", "1", "1",
    "1", "-1", "2.4142135623730950488016887242096980785696718753769",
    "-1", "2.4142135623730950488016887242096980785696718753769", "1",
    "2.4142135623730950488016887242096980785696718753769", "1", "-1",
    "1", "2.4142135623730950488016887242096980785696718753769", "-1",
    "-1", "1", "2.4142135623730950488016887242096980785696718753769",
    "2.4142135623730950488016887242096980785696718753769", "-1", "1",
    "1", "-1", "-2.4142135623730950488016887242096980785696718753769",
    "-1", "-2.4142135623730950488016887242096980785696718753769", "1",
    "-2.4142135623730950488016887242096980785696718753769", "1", "-1",
    "1", "-2.4142135623730950488016887242096980785696718753769", "-1",
    "-1", "1", "-2.4142135623730950488016887242096980785696718753769",
    "-2.4142135623730950488016887242096980785696718753769", "-1", "1",
    "-1", "-1", "2.4142135623730950488016887242096980785696718753769",
    "-1", "2.4142135623730950488016887242096980785696718753769", "-1",
    "2.4142135623730950488016887242096980785696718753769", "-1", "-1",
    "-1", "-1", "-2.4142135623730950488016887242096980785696718753769",
    "-1", "-2.4142135623730950488016887242096980785696718753769", "-1",
    "-2.4142135623730950488016887242096980785696718753769", "-1", "-1",
};
const char* const k_truncated_cuboctahedron[] = {
    "1", "2.4142135623730950488016887242096980785696718753769", "3.8284271247461900976033774484193961571393437507539",
    "2.4142135623730950488016887242096980785696718753769", "3.8284271247461900976033774484193961571393437507539", "1",
    "3.8284271247461900976033774484193961571393437507539", "1", "2.4142135623730950488016887242096980785696718753769",
    "1", "3.8284271247461900976033774484193961571393437507539", "2.4142135623730950488016887242096980785696718753769",
    "2.4142135623730950488016887242096980785696718753769", "1", "3.8284271247461900976033774484193961571393437507539",
    "3.8284271247461900976033774484193961571393437507539", "2.4142135623730950488016887242096980785696718753769", "1",
    "1", "2.4142135623730950488016887242096980785696718753769", "-3.8284271247461900976033774484193961571393437507539",
    "2.4142135623730950488016887242096980785696718753769", "-3.8284271247461900976033774484193961571393437507539", "1",
    "-3.8284271247461900976033774484193961571393437507539", "1", "2.4142135623730950488016887242096980785696718753769",
    "1", "-3.8284271247461900976033774484193961571393437507539", "2.4142135623730950488016887242096980785696718753769",
    "2.4142135623730950488016887242096980785696718753769", "1", "-3.8284271247461900976033774484193961571393437507539",
    "-3.8284271247461900976033774484193961571393437507539", "2.4142135623730950488016887242096980785696718753769", "1",
    "1", "-2.4142135623730950488016887242096980785696718753769", "3.8284271247461900976033774484193961571393437507539",
    "-2.4142135623730950488016887242096980785696718753769", "3.8284271247461900976033774484193961571393437507539", "1",
    "3.8284271247461900976033774484193961571393437507539", "1", "-2.4142135623730950488016887242096980785696718753769",
    "1", "3.8284271247461900976033774484193961571393437507539", "-2.4142135623730950488016887242096980785696718753769",
    "-2.4142135623730950488016887242096980785696718753769", "1", "3.8284271247461900976033774484193961571393437507539",
    "3.8284271247461900976033774484193961571393437507539", "-2.4142135623730950488016887242096980785696718753769", "1",
    "1", "-2.4142135623730950488016887242096980785696718753769", "-3.8284271247461900976033774484193961571393437507539",
    "-2.4142135623730950488016887242096980785696718753769", "-3.8284271247461900976033774484193961571393437507539", "1",
    "-3.8284271247461900976033774484193961571393437507539", "1", "-2.4142135623730950488016887242096980785696718753769",
    "1", "-3.8284271247461900976033774484193961571393437507539", "-2.4142135623730950488016887242096980785696718753769",
    "-2.4142135623730950488016887242096980785696718753769", "1", "-3.8284271247461900976033774484193961571393437507539",
    "-3.8284271247461900976033774484193961571393437507539", "-2.4142135623730950488016887242096980785696718753769", "1",
    "-1", "2.4142135623730950488016887242096980785696718753769", "3.8284271247461900976033774484193961571393437507539",
    "2.4142135623730950488016887242096980785696718753769", "3.8284271247461900976033774484193961571393437507539", "-1",
    "3.8284271247461900976033774484193961571393437507539", "-1", "2.4142135623730950488016887242096980785696718753769",
    "-1", "3.8284271247461900976033774484193961571393437507539", "2.4142135623730950488016887242096980785696718753769",
    "2.4142135623730950488016887242096980785696718753769", "-1", "3.8284271247461900976033774484193961571393437507539",
    "3.8284271247461900976033774484193961571393437507539", "2.4142135623730950488016887242096980785696718753769", "-1",
    "-1", "2.4142135623730950488016887242096980785696718753769", "-3.8284271247461900976033774484193961571393437507539",
    "2.4142135623730950488016887242096980785696718753769", "-3.8284271247461900976033774484193961571393437507539", "-1",
    "-3.8284271247461900976033774484193961571393437507539", "-1", "2.4142135623730950488016887242096980785696718753769",
    "-1", "-3.8284271247461900976033774484193961571393437507539", "2.4142135623730950488016887242096980785696718753769",
    "2.4142135623730950488016887242096980785696718753769", "-1", "-3.8284271247461900976033774484193961571393437507539",
    "-3.8284271247461900976033774484193961571393437507539", "2.4142135623730950488016887242096980785696718753769", "-1",
    "-1", "-2.4142135623730950488016887242096980785696718753769", "3.8284271247461900976033774484193961571393437507539",
    "-2.4142135623730950488016887242096980785696718753769", "3.8284271247461900976033774484193961571393437507539", "-1",
    "3.8284271247461900976033774484193961571393437507539", "-1", "-2.4142135623730950488016887242096980785696718753769",
    "-1", "3.8284271247461900976033774484193961571393437507539", "-2.4142135623730950488016887242096980785696718753769",
    "-2.4142135623730950488016887242096980785696718753769", "-1", "3.8284271247461900976033774484193961571393437507539",
    "3.8284271247461900976033774484193961571393437507539", "-2.4142135623730950488016887242096980785696718753769", "-1",
    "-1", "-2.4142135623730950488016887242096980785696718753769", "-3.8284271247461900976033774484193961571393437507539",
    "-2.4142135623730950488016887242096980785696718753769", "-3.8284271247461900976033774484193961571393437507539", "-1",
    "-3.8284271247461900976033774484193961571393437507539", "-1", "-2.4142135623730950488016887242096980785696718753769",
    "-1", "-3.8284271247461900976033774484193961571393437507539", "-2.4142135623730950488016887242096980785696718753769",
    "-2.4142135623730950488016887242096980785696718753769", "-1", "-3.8284271247461900976033774484193961571393437507539",
    "-3.8284271247461900976033774484193961571393437507539", "-2.4142135623730950488016887242096980785696718753769", "-1",
};
const char* const k_snub_cube[] = {
    "-1", "0.54368901269207636157085597180174798652520329765098", "1.8392867552141611325518525646532866004241787460976",
    "0.54368901269207636157085597180174798652520329765098", "1.8392867552141611325518525646532866004241787460976", "-1",
    "1.8392867552141611325518525646532866004241787460976", "-1", "0.54368901269207636157085597180174798652520329765098",
    "1", "-0.54368901269207636157085597180174798652520329765098", "1.8392867552141611325518525646532866004241787460976",
    "-0.54368901269207636157085597180174798652520329765098", "1.8392867552141611325518525646532866004241787460976", "1",
    "1.8392867552141611325518525646532866004241787460976", "1", "-0.54368901269207636157085597180174798652520329765098",
    "1", "0.54368901269207636157085597180174798652520329765098", "-1.8392867552141611325518525646532866004241787460976",
    "0.54368901269207636157085597180174798652520329765098", "-1.8392867552141611325518525646532866004241787460976", "1",
    "-1.8392867552141611325518525646532866004241787460976", "1", "0.54368901269207636157085597180174798652520329765098",
    "-1", "-0.54368901269207636157085597180174798652520329765098", "-1.8392867552141611325518525646532866004241787460976",
    "-0.54368901269207636157085597180174798652520329765098", "-1.8392867552141611325518525646532866004241787460976", "-1",
    "-1.8392867552141611325518525646532866004241787460976", "-1", "-0.54368901269207636157085597180174798652520329765098",
    "1", "-1.8392867552141611325518525646532866004241787460976", "-0.54368901269207636157085597180174798652520329765098",
    "-0.54368901269207636157085597180174798652520329765098", "1", "-1.8392867552141611325518525646532866004241787460976",
    "-1.8392867552141611325518525646532866004241787460976", "-0.54368901269207636157085597180174798652520329765098", "1",
    "-1", "1.8392867552141611325518525646532866004241787460976", "-0.54368901269207636157085597180174798652520329765098",
    "-0.54368901269207636157085597180174798652520329765098", "-1", "1.8392867552141611325518525646532866004241787460976",
    "1.8392867552141611325518525646532866004241787460976", "-0.54368901269207636157085597180174798652520329765098", "-1",
    "-1", "-1.8392867552141611325518525646532866004241787460976", "0.54368901269207636157085597180174798652520329765098",
    "0.54368901269207636157085597180174798652520329765098", "-1", "-1.8392867552141611325518525646532866004241787460976",
    "-1.8392867552141611325518525646532866004241787460976", "0.54368901269207636157085597180174798652520329765098", "-1",
    "1", "1.8392867552141611325518525646532866004241787460976", "0.54368901269207636157085597180174798652520329765098",
    "0.54368901269207636157085597180174798652520329765098", "1", "1.8392867552141611325518525646532866004241787460976",
    "1.8392867552141611325518525646532866004241787460976", "0.54368901269207636157085597180174798652520329765098", "1",
};
const char* const k_icosidodecahedron[] = {
    "0", "0", "1.6180339887498948482045868343656381177203091798058",
    "0", "1.6180339887498948482045868343656381177203091798058", "0",
    "1.6180339887498948482045868343656381177203091798058", "0", "0",
    "0", "0", "-1.6180339887498948482045868343656381177203091798058",
    "0", "-1.6180339887498948482045868343656381177203091798058", "0",
    "-1.6180339887498948482045868343656381177203091798058", "0", "0",
    "0.5", "0.80901699437494742410229341718281905886015458990288", "1.3090169943749474241022934171828190588601545899029",
    "0.80901699437494742410229341718281905886015458990288", "1.3090169943749474241022934171828190588601545899029", "0.5",
    "1.3090169943749474241022934171828190588601545899029", "0.5", "0.80901699437494742410229341718281905886015458990288",
    "0.5", "0.80901699437494742410229341718281905886015458990288", "-1.3090169943749474241022934171828190588601545899029",
    "0.80901699437494742410229341718281905886015458990288", "-1.3090169943749474241022934171828190588601545899029", "0.5",
    "-1.3090169943749474241022934171828190588601545899029", "0.5", "0.80901699437494742410229341718281905886015458990288",
    "0.5", "-0.80901699437494742410229341718281905886015458990288", "1.3090169943749474241022934171828190588601545899029",
    "-0.80901699437494742410229341718281905886015458990288", "1.3090169943749474241022934171828190588601545899029", "0.5",
    "1.3090169943749474241022934171828190588601545899029", "0.5", "-0.80901699437494742410229341718281905886015458990288",
    "0.5", "-0.80901699437494742410229341718281905886015458990288", "-1.3090169943749474241022934171828190588601545899029",
    "-0.80901699437494742410229341718281905886015458990288", "-1.3090169943749474241022934171828190588601545899029", "0.5",
    "-1.3090169943749474241022934171828190588601545899029", "0.5", "-0.80901699437494742410229341718281905886015458990288",
    "-0.5", "0.80901699437494742410229341718281905886015458990288", "1.3090169943749474241022934171828190588601545899029",
    "0.80901699437494742410229341718281905886015458990288", "1.3090169943749474241022934171828190588601545899029", "-0.5",
    "1.3090169943749474241022934171828190588601545899029", "-0.5", "0.80901699437494742410229341718281905886015458990288",
    "-0.5", "0.80901699437494742410229341718281905886015458990288", "-1.3090169943749474241022934171828190588601545899029",
    "0.80901699437494742410229341718281905886015458990288", "-1.3090169943749474241022934171828190588601545899029", "-0.5",
    "-1.3090169943749474241022934171828190588601545899029", "-0.5", "0.80901699437494742410229341718281905886015458990288",
    "-0.5", "-0.80901699437494742410229341718281905886015458990288", "1.3090169943749474241022934171828190588601545899029",
    "-0.80901699437494742410229341718281905886015458990288", "1.3090169943749474241022934171828190588601545899029", "-0.5",
    "1.3090169943749474241022934171828190588601545899029", "-0.5", "-0.80901699437494742410229341718281905886015458990288",
    "-0.5", "-0.80901699437494742410229341718281905886015458990288", "-1.3090169943749474241022934171828190588601545899029",
    "-0.80901699437494742410229341718281905886015458990288", "-1.3090169943749474241022934171828190588601545899029", "-0.5",
    "-1.3090169943749474241022934171828190588601545899029", "-0.5", "-0.80901699437494742410229341718281905886015458990288",
};
const char* const k_truncated_dodecahedron[] = {
    "0", "0.61803398874989484820458683436563811772030917980576", "3.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "3.6180339887498948482045868343656381177203091798058", "0",
    "3.6180339887498948482045868343656381177203091798058", "0", "0.61803398874989484820458683436563811772030917980576",
    "0", "0.61803398874989484820458683436563811772030917980576", "-3.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "-3.6180339887498948482045868343656381177203091798058", "0",
    "-3.6180339887498948482045868343656381177203091798058", "0", "0.61803398874989484820458683436563811772030917980576",
    "0", "-0.61803398874989484820458683436563811772030917980576", "3.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "3.6180339887498948482045868343656381177203091798058", "0",
    "3.6180339887498948482045868343656381177203091798058", "0", "-0.61803398874989484820458683436563811772030917980576",
    "0", "-0.61803398874989484820458683436563811772030917980576", "-3.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "-3.6180339887498948482045868343656381177203091798058", "0",
    "-3.6180339887498948482045868343656381177203091798058", "0", "-0.61803398874989484820458683436563811772030917980576",
    "0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "0.61803398874989484820458683436563811772030917980576",
    "3.2360679774997896964091736687312762354406183596115", "0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "0.61803398874989484820458683436563811772030917980576",
    "-3.2360679774997896964091736687312762354406183596115", "0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "0.61803398874989484820458683436563811772030917980576",
    "3.2360679774997896964091736687312762354406183596115", "0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "0.61803398874989484820458683436563811772030917980576",
    "-3.2360679774997896964091736687312762354406183596115", "0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "-0.61803398874989484820458683436563811772030917980576",
    "3.2360679774997896964091736687312762354406183596115", "-0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "-0.61803398874989484820458683436563811772030917980576",
    "-3.2360679774997896964091736687312762354406183596115", "-0.61803398874989484820458683436563811772030917980576", "1.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "-0.61803398874989484820458683436563811772030917980576",
    "3.2360679774997896964091736687312762354406183596115", "-0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "-0.61803398874989484820458683436563811772030917980576",
    "-3.2360679774997896964091736687312762354406183596115", "-0.61803398874989484820458683436563811772030917980576", "-1.6180339887498948482045868343656381177203091798058",
    "1.6180339887498948482045868343656381177203091798058", "2", "2.6180339887498948482045868343656381177203091798058",
    "2", "2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058",
    "2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058", "2",
    "1.6180339887498948482045868343656381177203091798058", "2", "-2.6180339887498948482045868343656381177203091798058",
    "2", "-2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058", "2",
    "1.6180339887498948482045868343656381177203091798058", "-2", "2.6180339887498948482045868343656381177203091798058",
    "-2", "2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058",
    "2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058", "-2",
    "1.6180339887498948482045868343656381177203091798058", "-2", "-2.6180339887498948482045868343656381177203091798058",
    "-2", "-2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058", "-2",
    "-1.6180339887498948482045868343656381177203091798058", "2", "2.6180339887498948482045868343656381177203091798058",
    "2", "2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058",
    "2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058", "2",
    "-1.6180339887498948482045868343656381177203091798058", "2", "-2.6180339887498948482045868343656381177203091798058",
    "2", "-2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058", "2",
    "-1.6180339887498948482045868343656381177203091798058", "-2", "2.6180339887498948482045868343656381177203091798058",
    "-2", "2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058",
    "2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058", "-2",
    "-1.6180339887498948482045868343656381177203091798058", "-2", "-2.6180339887498948482045868343656381177203091798058",
    "-2", "-2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058", "-2",
};
const char* const k_truncated_icosahedron[] = {
    "0", "1", "4.8541019662496845446137605030969143531609275394173",
    "1", "4.8541019662496845446137605030969143531609275394173", "0",
    "4.8541019662496845446137605030969143531609275394173", "0", "1",
    "0", "1", "-4.8541019662496845446137605030969143531609275394173",
    "1", "-4.8541019662496845446137605030969143531609275394173", "0",
    "-4.8541019662496845446137605030969143531609275394173", "0", "1",
    "0", "-1", "4.8541019662496845446137605030969143531609275394173",
    "-1", "4.8541019662496845446137605030969143531609275394173", "0",
    "4.8541019662496845446137605030969143531609275394173", "0", "-1",
    "0", "-1", "-4.8541019662496845446137605030969143531609275394173",
    "-1", "-4.8541019662496845446137605030969143531609275394173", "0",
    "-4.8541019662496845446137605030969143531609275394173", "0", "-1",
    "1", "3.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "3.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "1",
    "3.2360679774997896964091736687312762354406183596115", "1", "3.6180339887498948482045868343656381177203091798058",
    "1", "3.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "3.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "1",
    "-3.2360679774997896964091736687312762354406183596115", "1", "3.6180339887498948482045868343656381177203091798058",
    "1", "-3.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "-3.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "1",
    "3.2360679774997896964091736687312762354406183596115", "1", "-3.6180339887498948482045868343656381177203091798058",
    "1", "-3.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "-3.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "1",
    "-3.2360679774997896964091736687312762354406183596115", "1", "-3.6180339887498948482045868343656381177203091798058",
    "-1", "3.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "3.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "-1",
    "3.2360679774997896964091736687312762354406183596115", "-1", "3.6180339887498948482045868343656381177203091798058",
    "-1", "3.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "3.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "-1",
    "-3.2360679774997896964091736687312762354406183596115", "-1", "3.6180339887498948482045868343656381177203091798058",
    "-1", "-3.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "-3.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "-1",
    "3.2360679774997896964091736687312762354406183596115", "-1", "-3.6180339887498948482045868343656381177203091798058",
    "-1", "-3.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "-3.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "-1",
    "-3.2360679774997896964091736687312762354406183596115", "-1", "-3.6180339887498948482045868343656381177203091798058",
    "1.6180339887498948482045868343656381177203091798058", "2", "4.2360679774997896964091736687312762354406183596115",
    "2", "4.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "4.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "2",
    "1.6180339887498948482045868343656381177203091798058", "2", "-4.2360679774997896964091736687312762354406183596115",
    "2", "-4.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "-4.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "2",
    "1.6180339887498948482045868343656381177203091798058", "-2", "4.2360679774997896964091736687312762354406183596115",
    "-2", "4.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "4.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "-2",
    "1.6180339887498948482045868343656381177203091798058", "-2", "-4.2360679774997896964091736687312762354406183596115",
    "-2", "-4.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "-4.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "-2",
    "-1.6180339887498948482045868343656381177203091798058", "2", "4.2360679774997896964091736687312762354406183596115",
    "2", "4.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "4.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "2",
    "-1.6180339887498948482045868343656381177203091798058", "2", "-4.2360679774997896964091736687312762354406183596115",
    "2", "-4.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "-4.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "2",
    "-1.6180339887498948482045868343656381177203091798058", "-2", "4.2360679774997896964091736687312762354406183596115",
    "-2", "4.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "4.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "-2",
    "-1.6180339887498948482045868343656381177203091798058", "-2", "-4.2360679774997896964091736687312762354406183596115",
    "-2", "-4.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "-4.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "-2",
};
const char* const k_rhombicosidodecahedron[] = {
    "1", "1", "4.2360679774997896964091736687312762354406183596115",
    "1", "4.2360679774997896964091736687312762354406183596115", "1",
    "4.2360679774997896964091736687312762354406183596115", "1", "1",
    "1", "1", "-4.2360679774997896964091736687312762354406183596115",
    "1", "-4.2360679774997896964091736687312762354406183596115", "1",
    "-4.2360679774997896964091736687312762354406183596115", "1", "1",
    "1", "-1", "4.2360679774997896964091736687312762354406183596115",
    "-1", "4.2360679774997896964091736687312762354406183596115", "1",
    "4.2360679774997896964091736687312762354406183596115", "1", "-1",
    "1", "-1", "-4.2360679774997896964091736687312762354406183596115",
    "-1", "-4.2360679774997896964091736687312762354406183596115", "1",
    "-4.2360679774997896964091736687312762354406183596115", "1", "-1",
    "-1", "1", "4.2360679774997896964091736687312762354406183596115",
    "1", "4.2360679774997896964091736687312762354406183596115", "-1",
    "4.2360679774997896964091736687312762354406183596115", "-1", "1",
    "-1", "1", "-4.2360679774997896964091736687312762354406183596115",
    "1", "-4.2360679774997896964091736687312762354406183596115", "-1",
    "-4.2360679774997896964091736687312762354406183596115", "-1", "1",
    "-1", "-1", "4.2360679774997896964091736687312762354406183596115",
    "-1", "4.2360679774997896964091736687312762354406183596115", "-1",
    "4.2360679774997896964091736687312762354406183596115", "-1", "-1",
    "-1", "-1", "-4.2360679774997896964091736687312762354406183596115",
    "-1", "-4.2360679774997896964091736687312762354406183596115", "-1",
    "-4.2360679774997896964091736687312762354406183596115", "-1", "-1",
    "2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "2.6180339887498948482045868343656381177203091798058",
    "3.2360679774997896964091736687312762354406183596115", "2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058",
    "2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "2.6180339887498948482045868343656381177203091798058",
    "-3.2360679774997896964091736687312762354406183596115", "2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058",
    "2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "2.6180339887498948482045868343656381177203091798058",
    "3.2360679774997896964091736687312762354406183596115", "2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058",
    "2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "2.6180339887498948482045868343656381177203091798058",
    "-3.2360679774997896964091736687312762354406183596115", "2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "-2.6180339887498948482045868343656381177203091798058",
    "3.2360679774997896964091736687312762354406183596115", "-2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "-2.6180339887498948482045868343656381177203091798058",
    "-3.2360679774997896964091736687312762354406183596115", "-2.6180339887498948482045868343656381177203091798058", "1.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "3.2360679774997896964091736687312762354406183596115", "-2.6180339887498948482045868343656381177203091798058",
    "3.2360679774997896964091736687312762354406183596115", "-2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "-3.2360679774997896964091736687312762354406183596115", "-2.6180339887498948482045868343656381177203091798058",
    "-3.2360679774997896964091736687312762354406183596115", "-2.6180339887498948482045868343656381177203091798058", "-1.6180339887498948482045868343656381177203091798058",
    "3.6180339887498948482045868343656381177203091798058", "0", "2.6180339887498948482045868343656381177203091798058",
    "0", "2.6180339887498948482045868343656381177203091798058", "3.6180339887498948482045868343656381177203091798058",
    "2.6180339887498948482045868343656381177203091798058", "3.6180339887498948482045868343656381177203091798058", "0",
    "3.6180339887498948482045868343656381177203091798058", "0", "-2.6180339887498948482045868343656381177203091798058",
    "0", "-2.6180339887498948482045868343656381177203091798058", "3.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "3.6180339887498948482045868343656381177203091798058", "0",
    "-3.6180339887498948482045868343656381177203091798058", "0", "2.6180339887498948482045868343656381177203091798058",
    "0", "2.6180339887498948482045868343656381177203091798058", "-3.6180339887498948482045868343656381177203091798058",
    "2.6180339887498948482045868343656381177203091798058", "-3.6180339887498948482045868343656381177203091798058", "0",
    "-3.6180339887498948482045868343656381177203091798058", "0", "-2.6180339887498948482045868343656381177203091798058",
    "0", "-2.6180339887498948482045868343656381177203091798058", "-3.6180339887498948482045868343656381177203091798058",
    "-2.6180339887498948482045868343656381177203091798058", "-3.6180339887498948482045868343656381177203091798058", "0",
};
const char* const k_truncated_icosidodecahedron[] = {
    "0.61803398874989484820458683436563811772030917980576", "0.61803398874989484820458683436563811772030917980576", "4.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "4.6180339887498948482045868343656381177203091798058", "0.61803398874989484820458683436563811772030917980576",
    "4.6180339887498948482045868343656381177203091798058", "0.61803398874989484820458683436563811772030917980576", "0.61803398874989484820458683436563811772030917980576",
    "0.61803398874989484820458683436563811772030917980576", "0.61803398874989484820458683436563811772030917980576", "-4.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "-4.6180339887498948482045868343656381177203091798058", "0.61803398874989484820458683436563811772030917980576",
    "-4.6180339887498948482045868343656381177203091798058", "0.61803398874989484820458683436563811772030917980576", "0.61803398874989484820458683436563811772030917980576",
    "0.61803398874989484820458683436563811772030917980576", "-0.61803398874989484820458683436563811772030917980576", "4.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "4.6180339887498948482045868343656381177203091798058", "0.61803398874989484820458683436563811772030917980576",
    "4.6180339887498948482045868343656381177203091798058", "0.61803398874989484820458683436563811772030917980576", "-0.61803398874989484820458683436563811772030917980576",
    "0.61803398874989484820458683436563811772030917980576", "-0.61803398874989484820458683436563811772030917980576", "-4.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "-4.6180339887498948482045868343656381177203091798058", "0.61803398874989484820458683436563811772030917980576",
    "-4.6180339887498948482045868343656381177203091798058", "0.61803398874989484820458683436563811772030917980576", "-0.61803398874989484820458683436563811772030917980576",
    "-0.61803398874989484820458683436563811772030917980576", "0.61803398874989484820458683436563811772030917980576", "4.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "4.6180339887498948482045868343656381177203091798058", "-0.61803398874989484820458683436563811772030917980576",
    "4.6180339887498948482045868343656381177203091798058", "-0.61803398874989484820458683436563811772030917980576", "0.61803398874989484820458683436563811772030917980576",
    "-0.61803398874989484820458683436563811772030917980576", "0.61803398874989484820458683436563811772030917980576", "-4.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "-4.6180339887498948482045868343656381177203091798058", "-0.61803398874989484820458683436563811772030917980576",
    "-4.6180339887498948482045868343656381177203091798058", "-0.61803398874989484820458683436563811772030917980576", "0.61803398874989484820458683436563811772030917980576",
    "-0.61803398874989484820458683436563811772030917980576", "-0.61803398874989484820458683436563811772030917980576", "4.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "4.6180339887498948482045868343656381177203091798058", "-0.61803398874989484820458683436563811772030917980576",
    "4.6180339887498948482045868343656381177203091798058", "-0.61803398874989484820458683436563811772030917980576", "-0.61803398874989484820458683436563811772030917980576",
    "-0.61803398874989484820458683436563811772030917980576", "-0.61803398874989484820458683436563811772030917980576", "-4.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "-4.6180339887498948482045868343656381177203091798058", "-0.61803398874989484820458683436563811772030917980576",
    "-4.6180339887498948482045868343656381177203091798058", "-0.61803398874989484820458683436563811772030917980576", "-0.61803398874989484820458683436563811772030917980576",
    "1.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "4.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "4.2360679774997896964091736687312762354406183596115", "1.2360679774997896964091736687312762354406183596115",
    "4.2360679774997896964091736687312762354406183596115", "1.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "1.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "-4.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "-4.2360679774997896964091736687312762354406183596115", "1.2360679774997896964091736687312762354406183596115",
    "-4.2360679774997896964091736687312762354406183596115", "1.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "1.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "4.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "4.2360679774997896964091736687312762354406183596115", "1.2360679774997896964091736687312762354406183596115",
    "4.2360679774997896964091736687312762354406183596115", "1.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "1.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "-4.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "-4.2360679774997896964091736687312762354406183596115", "1.2360679774997896964091736687312762354406183596115",
    "-4.2360679774997896964091736687312762354406183596115", "1.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "-1.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "4.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "4.2360679774997896964091736687312762354406183596115", "-1.2360679774997896964091736687312762354406183596115",
    "4.2360679774997896964091736687312762354406183596115", "-1.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "-1.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "-4.2360679774997896964091736687312762354406183596115",
    "1.6180339887498948482045868343656381177203091798058", "-4.2360679774997896964091736687312762354406183596115", "-1.2360679774997896964091736687312762354406183596115",
    "-4.2360679774997896964091736687312762354406183596115", "-1.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "-1.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "4.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "4.2360679774997896964091736687312762354406183596115", "-1.2360679774997896964091736687312762354406183596115",
    "4.2360679774997896964091736687312762354406183596115", "-1.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "-1.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "-4.2360679774997896964091736687312762354406183596115",
    "-1.6180339887498948482045868343656381177203091798058", "-4.2360679774997896964091736687312762354406183596115", "-1.2360679774997896964091736687312762354406183596115",
    "-4.2360679774997896964091736687312762354406183596115", "-1.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "2.6180339887498948482045868343656381177203091798058", "3.8541019662496845446137605030969143531609275394173",
    "2.6180339887498948482045868343656381177203091798058", "3.8541019662496845446137605030969143531609275394173", "0.61803398874989484820458683436563811772030917980576",
    "3.8541019662496845446137605030969143531609275394173", "0.61803398874989484820458683436563811772030917980576", "2.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "2.6180339887498948482045868343656381177203091798058", "-3.8541019662496845446137605030969143531609275394173",
    "2.6180339887498948482045868343656381177203091798058", "-3.8541019662496845446137605030969143531609275394173", "0.61803398874989484820458683436563811772030917980576",
    "-3.8541019662496845446137605030969143531609275394173", "0.61803398874989484820458683436563811772030917980576", "2.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "-2.6180339887498948482045868343656381177203091798058", "3.8541019662496845446137605030969143531609275394173",
    "-2.6180339887498948482045868343656381177203091798058", "3.8541019662496845446137605030969143531609275394173", "0.61803398874989484820458683436563811772030917980576",
    "3.8541019662496845446137605030969143531609275394173", "0.61803398874989484820458683436563811772030917980576", "-2.6180339887498948482045868343656381177203091798058",
    "0.61803398874989484820458683436563811772030917980576", "-2.6180339887498948482045868343656381177203091798058", "-3.8541019662496845446137605030969143531609275394173",
    "-2.6180339887498948482045868343656381177203091798058", "-3.8541019662496845446137605030969143531609275394173", "0.61803398874989484820458683436563811772030917980576",
    "-3.8541019662496845446137605030969143531609275394173", "0.61803398874989484820458683436563811772030917980576", "-2.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "2.6180339887498948482045868343656381177203091798058", "3.8541019662496845446137605030969143531609275394173",
    "2.6180339887498948482045868343656381177203091798058", "3.8541019662496845446137605030969143531609275394173", "-0.61803398874989484820458683436563811772030917980576",
    "3.8541019662496845446137605030969143531609275394173", "-0.61803398874989484820458683436563811772030917980576", "2.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "2.6180339887498948482045868343656381177203091798058", "-3.8541019662496845446137605030969143531609275394173",
    "2.6180339887498948482045868343656381177203091798058", "-3.8541019662496845446137605030969143531609275394173", "-0.61803398874989484820458683436563811772030917980576",
    "-3.8541019662496845446137605030969143531609275394173", "-0.61803398874989484820458683436563811772030917980576", "2.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "-2.6180339887498948482045868343656381177203091798058", "3.8541019662496845446137605030969143531609275394173",
    "-2.6180339887498948482045868343656381177203091798058", "3.8541019662496845446137605030969143531609275394173", "-0.61803398874989484820458683436563811772030917980576",
    "3.8541019662496845446137605030969143531609275394173", "-0.61803398874989484820458683436563811772030917980576", "-2.6180339887498948482045868343656381177203091798058",
    "-0.61803398874989484820458683436563811772030917980576", "-2.6180339887498948482045868343656381177203091798058", "-3.8541019662496845446137605030969143531609275394173",
    "-2.6180339887498948482045868343656381177203091798058", "-3.8541019662496845446137605030969143531609275394173", "-0.61803398874989484820458683436563811772030917980576",
    "-3.8541019662496845446137605030969143531609275394173", "-0.61803398874989484820458683436563811772030917980576", "-2.6180339887498948482045868343656381177203091798058",
    "2.2360679774997896964091736687312762354406183596115", "2", "3.6180339887498948482045868343656381177203091798058",
    "2", "3.6180339887498948482045868343656381177203091798058", "2.2360679774997896964091736687312762354406183596115",
    "3.6180339887498948482045868343656381177203091798058", "2.2360679774997896964091736687312762354406183596115", "2",
    "2.2360679774997896964091736687312762354406183596115", "2", "-3.6180339887498948482045868343656381177203091798058",
    "2", "-3.6180339887498948482045868343656381177203091798058", "2.2360679774997896964091736687312762354406183596115",
    "-3.6180339887498948482045868343656381177203091798058", "2.2360679774997896964091736687312762354406183596115", "2",
    "2.2360679774997896964091736687312762354406183596115", "-2", "3.6180339887498948482045868343656381177203091798058",
    "-2", "3.6180339887498948482045868343656381177203091798058", "2.2360679774997896964091736687312762354406183596115",
    "3.6180339887498948482045868343656381177203091798058", "2.2360679774997896964091736687312762354406183596115", "-2",
    "2.2360679774997896964091736687312762354406183596115", "-2", "-3.6180339887498948482045868343656381177203091798058",
    "-2", "-3.6180339887498948482045868343656381177203091798058", "2.2360679774997896964091736687312762354406183596115",
    "-3.6180339887498948482045868343656381177203091798058", "2.2360679774997896964091736687312762354406183596115", "-2",
    "-2.2360679774997896964091736687312762354406183596115", "2", "3.6180339887498948482045868343656381177203091798058",
    "2", "3.6180339887498948482045868343656381177203091798058", "-2.2360679774997896964091736687312762354406183596115",
    "3.6180339887498948482045868343656381177203091798058", "-2.2360679774997896964091736687312762354406183596115", "2",
    "-2.2360679774997896964091736687312762354406183596115", "2", "-3.6180339887498948482045868343656381177203091798058",
    "2", "-3.6180339887498948482045868343656381177203091798058", "-2.2360679774997896964091736687312762354406183596115",
    "-3.6180339887498948482045868343656381177203091798058", "-2.2360679774997896964091736687312762354406183596115", "2",
    "-2.2360679774997896964091736687312762354406183596115", "-2", "3.6180339887498948482045868343656381177203091798058",
    "-2", "3.6180339887498948482045868343656381177203091798058", "-2.2360679774997896964091736687312762354406183596115",
    "3.6180339887498948482045868343656381177203091798058", "-2.2360679774997896964091736687312762354406183596115", "-2",
    "-2.2360679774997896964091736687312762354406183596115", "-2", "-3.6180339887498948482045868343656381177203091798058",
    "-2", "-3.6180339887498948482045868343656381177203091798058", "-2.2360679774997896964091736687312762354406183596115",
    "-3.6180339887498948482045868343656381177203091798058", "-2.2360679774997896964091736687312762354406183596115", "-2",
    "1.6180339887498948482045868343656381177203091798058", "3", "3.2360679774997896964091736687312762354406183596115",
    "3", "3.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "3.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "3",
    "1.6180339887498948482045868343656381177203091798058", "3", "-3.2360679774997896964091736687312762354406183596115",
    "3", "-3.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "-3.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "3",
    "1.6180339887498948482045868343656381177203091798058", "-3", "3.2360679774997896964091736687312762354406183596115",
    "-3", "3.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "3.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "-3",
    "1.6180339887498948482045868343656381177203091798058", "-3", "-3.2360679774997896964091736687312762354406183596115",
    "-3", "-3.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058",
    "-3.2360679774997896964091736687312762354406183596115", "1.6180339887498948482045868343656381177203091798058", "-3",
    "-1.6180339887498948482045868343656381177203091798058", "3", "3.2360679774997896964091736687312762354406183596115",
    "3", "3.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "3.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "3",
    "-1.6180339887498948482045868343656381177203091798058", "3", "-3.2360679774997896964091736687312762354406183596115",
    "3", "-3.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "-3.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "3",
    "-1.6180339887498948482045868343656381177203091798058", "-3", "3.2360679774997896964091736687312762354406183596115",
    "-3", "3.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "3.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "-3",
    "-1.6180339887498948482045868343656381177203091798058", "-3", "-3.2360679774997896964091736687312762354406183596115",
    "-3", "-3.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058",
    "-3.2360679774997896964091736687312762354406183596115", "-1.6180339887498948482045868343656381177203091798058", "-3",
};
const char* const k_snub_dodecahedron[] = {
    "1.1354307389338426347497441253378568692461893510405", "1.286059211828145146214928282881222858388959278669", "3.9556779308404373447368254523110150732074736802138",
    "1.286059211828145146214928282881222858388959278669", "3.9556779308404373447368254523110150732074736802138", "1.1354307389338426347497441253378568692461893510405",
    "3.9556779308404373447368254523110150732074736802138", "1.1354307389338426347497441253378568692461893510405", "1.286059211828145146214928282881222858388959278669",
    "2.8305308325119642295421800373984558656258019974157", "1.4566703539143829547213432596750415895254068654268", "2.908048458676030838592989821815349621672720182493",
    "1.4566703539143829547213432596750415895254068654268", "2.908048458676030838592989821815349621672720182493", "2.8305308325119642295421800373984558656258019974157",
    "2.908048458676030838592989821815349621672720182493", "2.8305308325119642295421800373984558656258019974157", "1.4566703539143829547213432596750415895254068654268",
    "0.74964331622912459053321903321668945668155270728548", "0.6618420494596884619273105383744980389701168539657", "-4.1941076705041759848079181046965724800616794611621",
    "0.6618420494596884619273105383744980389701168539657", "-4.1941076705041759848079181046965724800616794611621", "0.74964331622912459053321903321668945668155270728548",
    "-4.1941076705041759848079181046965724800616794611621", "0.74964331622912459053321903321668945668155270728548", "0.6618420494596884619273105383744980389701168539657",
    "0.38578742270471804421652509212116741256463664375505", "2.4990075769260543900154821926359734836820668147869", "-3.4923728819716526914694905757729539045959188513814",
    "2.4990075769260543900154821926359734836820668147869", "-3.4923728819716526914694905757729539045959188513814", "0.38578742270471804421652509212116741256463664375505",
    "-3.4923728819716526914694905757729539045959188513814", "0.38578742270471804421652509212116741256463664375505", "2.4990075769260543900154821926359734836820668147869",
    "2.2063136701435075452545622928917310462069595727123", "1.6951000935781215947924359120605989963796126463751", "-3.2938358813807488828095149139365170342373568262481",
    "1.6951000935781215947924359120605989963796126463751", "-3.2938358813807488828095149139365170342373568262481", "2.2063136701435075452545622928917310462069595727123",
    "-3.2938358813807488828095149139365170342373568262481", "2.2063136701435075452545622928917310462069595727123", "1.6951000935781215947924359120605989963796126463751",
    "0.74964331622912459053321903321668945668155270728548", "-0.6618420494596884619273105383744980389701168539657", "4.1941076705041759848079181046965724800616794611621",
    "-0.6618420494596884619273105383744980389701168539657", "4.1941076705041759848079181046965724800616794611621", "0.74964331622912459053321903321668945668155270728548",
    "4.1941076705041759848079181046965724800616794611621", "0.74964331622912459053321903321668945668155270728548", "-0.6618420494596884619273105383744980389701168539657",
    "0.38578742270471804421652509212116741256463664375505", "-2.4990075769260543900154821926359734836820668147869", "3.4923728819716526914694905757729539045959188513814",
    "-2.4990075769260543900154821926359734836820668147869", "3.4923728819716526914694905757729539045959188513814", "0.38578742270471804421652509212116741256463664375505",
    "3.4923728819716526914694905757729539045959188513814", "0.38578742270471804421652509212116741256463664375505", "-2.4990075769260543900154821926359734836820668147869",
    "2.2063136701435075452545622928917310462069595727123", "-1.6951000935781215947924359120605989963796126463751", "3.2938358813807488828095149139365170342373568262481",
    "-1.6951000935781215947924359120605989963796126463751", "3.2938358813807488828095149139365170342373568262481", "2.2063136701435075452545622928917310462069595727123",
    "3.2938358813807488828095149139365170342373568262481", "2.2063136701435075452545622928917310462069595727123", "-1.6951000935781215947924359120605989963796126463751",
    "1.1354307389338426347497441253378568692461893510405", "-1.286059211828145146214928282881222858388959278669", "-3.9556779308404373447368254523110150732074736802138",
    "-1.286059211828145146214928282881222858388959278669", "-3.9556779308404373447368254523110150732074736802138", "1.1354307389338426347497441253378568692461893510405",
    "-3.9556779308404373447368254523110150732074736802138", "1.1354307389338426347497441253378568692461893510405", "-1.286059211828145146214928282881222858388959278669",
    "2.8305308325119642295421800373984558656258019974157", "-1.4566703539143829547213432596750415895254068654268", "-2.908048458676030838592989821815349621672720182493",
    "-1.4566703539143829547213432596750415895254068654268", "-2.908048458676030838592989821815349621672720182493", "2.8305308325119642295421800373984558656258019974157",
    "-2.908048458676030838592989821815349621672720182493", "2.8305308325119642295421800373984558656258019974157", "-1.4566703539143829547213432596750415895254068654268",
    "-0.74964331622912459053321903321668945668155270728548", "0.6618420494596884619273105383744980389701168539657", "4.1941076705041759848079181046965724800616794611621",
    "0.6618420494596884619273105383744980389701168539657", "4.1941076705041759848079181046965724800616794611621", "-0.74964331622912459053321903321668945668155270728548",
    "4.1941076705041759848079181046965724800616794611621", "-0.74964331622912459053321903321668945668155270728548", "0.6618420494596884619273105383744980389701168539657",
    "-0.38578742270471804421652509212116741256463664375505", "2.4990075769260543900154821926359734836820668147869", "3.4923728819716526914694905757729539045959188513814",
    "2.4990075769260543900154821926359734836820668147869", "3.4923728819716526914694905757729539045959188513814", "-0.38578742270471804421652509212116741256463664375505",
    "3.4923728819716526914694905757729539045959188513814", "-0.38578742270471804421652509212116741256463664375505", "2.4990075769260543900154821926359734836820668147869",
    "-2.2063136701435075452545622928917310462069595727123", "1.6951000935781215947924359120605989963796126463751", "3.2938358813807488828095149139365170342373568262481",
    "1.6951000935781215947924359120605989963796126463751", "3.2938358813807488828095149139365170342373568262481", "-2.2063136701435075452545622928917310462069595727123",
    "3.2938358813807488828095149139365170342373568262481", "-2.2063136701435075452545622928917310462069595727123", "1.6951000935781215947924359120605989963796126463751",
    "-1.1354307389338426347497441253378568692461893510405", "1.286059211828145146214928282881222858388959278669", "-3.9556779308404373447368254523110150732074736802138",
    "1.286059211828145146214928282881222858388959278669", "-3.9556779308404373447368254523110150732074736802138", "-1.1354307389338426347497441253378568692461893510405",
    "-3.9556779308404373447368254523110150732074736802138", "-1.1354307389338426347497441253378568692461893510405", "1.286059211828145146214928282881222858388959278669",
    "-2.8305308325119642295421800373984558656258019974157", "1.4566703539143829547213432596750415895254068654268", "-2.908048458676030838592989821815349621672720182493",
    "1.4566703539143829547213432596750415895254068654268", "-2.908048458676030838592989821815349621672720182493", "-2.8305308325119642295421800373984558656258019974157",
    "-2.908048458676030838592989821815349621672720182493", "-2.8305308325119642295421800373984558656258019974157", "1.4566703539143829547213432596750415895254068654268",
    "-1.1354307389338426347497441253378568692461893510405", "-1.286059211828145146214928282881222858388959278669", "3.9556779308404373447368254523110150732074736802138",
    "-1.286059211828145146214928282881222858388959278669", "3.9556779308404373447368254523110150732074736802138", "-1.1354307389338426347497441253378568692461893510405",
    "3.9556779308404373447368254523110150732074736802138", "-1.1354307389338426347497441253378568692461893510405", "-1.286059211828145146214928282881222858388959278669",
    "-2.8305308325119642295421800373984558656258019974157", "-1.4566703539143829547213432596750415895254068654268", "2.908048458676030838592989821815349621672720182493",
    "-1.4566703539143829547213432596750415895254068654268", "2.908048458676030838592989821815349621672720182493", "-2.8305308325119642295421800373984558656258019974157",
    "2.908048458676030838592989821815349621672720182493", "-2.8305308325119642295421800373984558656258019974157", "-1.4566703539143829547213432596750415895254068654268",
    "-0.74964331622912459053321903321668945668155270728548", "-0.6618420494596884619273105383744980389701168539657", "-4.1941076705041759848079181046965724800616794611621",
    "-0.6618420494596884619273105383744980389701168539657", "-4.1941076705041759848079181046965724800616794611621", "-0.74964331622912459053321903321668945668155270728548",
    "-4.1941076705041759848079181046965724800616794611621", "-0.74964331622912459053321903321668945668155270728548", "-0.6618420494596884619273105383744980389701168539657",
    "-0.38578742270471804421652509212116741256463664375505", "-2.4990075769260543900154821926359734836820668147869", "-3.4923728819716526914694905757729539045959188513814",
    "-2.4990075769260543900154821926359734836820668147869", "-3.4923728819716526914694905757729539045959188513814", "-0.38578742270471804421652509212116741256463664375505",
    "-3.4923728819716526914694905757729539045959188513814", "-0.38578742270471804421652509212116741256463664375505", "-2.4990075769260543900154821926359734836820668147869",
    "-2.2063136701435075452545622928917310462069595727123", "-1.6951000935781215947924359120605989963796126463751", "-3.2938358813807488828095149139365170342373568262481",
    "-1.6951000935781215947924359120605989963796126463751", "-3.2938358813807488828095149139365170342373568262481", "-2.2063136701435075452545622928917310462069595727123",
    "-3.2938358813807488828095149139365170342373568262481", "-2.2063136701435075452545622928917310462069595727123", "-1.6951000935781215947924359120605989963796126463751",
};
const char* const k_triakis_tetrahedron[] = {
    "0.94280904158206336586779248280646538571311458358463", "0.94280904158206336586779248280646538571311458358463", "-0.94280904158206336586779248280646538571311458358463",
    "-0.94280904158206336586779248280646538571311458358463", "0.94280904158206336586779248280646538571311458358463", "0.94280904158206336586779248280646538571311458358463",
    "0.56568542494923801952067548968387923142786875015078", "0.56568542494923801952067548968387923142786875015078", "0.56568542494923801952067548968387923142786875015078",
    "0.94280904158206336586779248280646538571311458358463", "-0.94280904158206336586779248280646538571311458358463", "0.94280904158206336586779248280646538571311458358463",
    "-0.94280904158206336586779248280646538571311458358463", "-0.94280904158206336586779248280646538571311458358463", "-0.94280904158206336586779248280646538571311458358463",
    "-0.56568542494923801952067548968387923142786875015078", "-0.56568542494923801952067548968387923142786875015078", "0.56568542494923801952067548968387923142786875015078",
    "0.56568542494923801952067548968387923142786875015078", "-0.56568542494923801952067548968387923142786875015078", "-0.56568542494923801952067548968387923142786875015078",
    "-0.56568542494923801952067548968387923142786875015078", "0.56568542494923801952067548968387923142786875015078", "-0.56568542494923801952067548968387923142786875015078",
};
const char* const k_rhombic_dodecahedron[] = {
    "1", "0", "0",
    "0.5", "0.5", "0.5",
    "0", "0", "1",
    "0", "1", "0",
    "0.5", "0.5", "-0.5",
    "-1", "0", "0",
    "-0.5", "0.5", "0.5",
    "0", "-1", "0",
    "0.5", "-0.5", "0.5",
    "-0.5", "-0.5", "0.5",
    "0", "0", "-1",
    "-0.5", "0.5", "-0.5",
    "0.5", "-0.5", "-0.5",
    "-0.5", "-0.5", "-0.5",
};
const char* const k_triakis_octahedron[] = {
    "1", "0", "0",
    "0", "1", "0",
    "0.41421356237309504880168872420969807856967187537695", "0.41421356237309504880168872420969807856967187537695", "0.41421356237309504880168872420969807856967187537695",
    "0", "0", "1",
    "0", "-1", "0",
    "0.41421356237309504880168872420969807856967187537695", "0.41421356237309504880168872420969807856967187537695", "-0.41421356237309504880168872420969807856967187537695",
    "-1", "0", "0",
    "0", "0", "-1",
    "-0.41421356237309504880168872420969807856967187537695", "0.41421356237309504880168872420969807856967187537695", "0.41421356237309504880168872420969807856967187537695",
    "0.41421356237309504880168872420969807856967187537695", "-0.41421356237309504880168872420969807856967187537695", "0.41421356237309504880168872420969807856967187537695",
    "-0.41421356237309504880168872420969807856967187537695", "-0.41421356237309504880168872420969807856967187537695", "0.41421356237309504880168872420969807856967187537695",
    "0.41421356237309504880168872420969807856967187537695", "-0.41421356237309504880168872420969807856967187537695", "-0.41421356237309504880168872420969807856967187537695",
    "-0.41421356237309504880168872420969807856967187537695", "0.41421356237309504880168872420969807856967187537695", "-0.41421356237309504880168872420969807856967187537695",
    "-0.41421356237309504880168872420969807856967187537695", "-0.41421356237309504880168872420969807856967187537695", "-0.41421356237309504880168872420969807856967187537695",
};
const char* const k_tetrakis_hexahedron[] = {
    "0.33333333333333333333333333333333333333333333333333", "0.33333333333333333333333333333333333333333333333333", "0.33333333333333333333333333333333333333333333333333",
    "0.33333333333333333333333333333333333333333333333333", "-0.33333333333333333333333333333333333333333333333333", "0.33333333333333333333333333333333333333333333333333",
    "0.33333333333333333333333333333333333333333333333333", "0.33333333333333333333333333333333333333333333333333", "-0.33333333333333333333333333333333333333333333333333",
    "-0.33333333333333333333333333333333333333333333333333", "0.33333333333333333333333333333333333333333333333333", "0.33333333333333333333333333333333333333333333333333",
    "-0.33333333333333333333333333333333333333333333333333", "-0.33333333333333333333333333333333333333333333333333", "0.33333333333333333333333333333333333333333333333333",
    "-0.5", "0", "0",
    "0", "0", "0.5",
    "0", "0.5", "0",
    "-0.33333333333333333333333333333333333333333333333333", "0.33333333333333333333333333333333333333333333333333", "-0.33333333333333333333333333333333333333333333333333",
    "0.5", "0", "0",
    "0.33333333333333333333333333333333333333333333333333", "-0.33333333333333333333333333333333333333333333333333", "-0.33333333333333333333333333333333333333333333333333",
    "0", "0", "-0.5",
    "0", "-0.5", "0",
    "-0.33333333333333333333333333333333333333333333333333", "-0.33333333333333333333333333333333333333333333333333", "-0.33333333333333333333333333333333333333333333333333",
};
const char* const k_deltoidal_icositetrahedron[] = {
    "0.29289321881345247559915563789515096071516406231153", "0.29289321881345247559915563789515096071516406231153", "0",
    "0.22654091966098642159975875368432884591861830351758", "0.22654091966098642159975875368432884591861830351758", "0.22654091966098642159975875368432884591861830351758",
    "0.29289321881345247559915563789515096071516406231153", "0", "0.29289321881345247559915563789515096071516406231153",
    "0", "0.29289321881345247559915563789515096071516406231153", "0.29289321881345247559915563789515096071516406231153",
    "0", "0.41421356237309504880168872420969807856967187537695", "0",
    "-0.29289321881345247559915563789515096071516406231153", "0.29289321881345247559915563789515096071516406231153", "0",
    "0.22654091966098642159975875368432884591861830351758", "0.22654091966098642159975875368432884591861830351758", "-0.22654091966098642159975875368432884591861830351758",
    "0", "0.29289321881345247559915563789515096071516406231153", "-0.29289321881345247559915563789515096071516406231153",
    "-0.29289321881345247559915563789515096071516406231153", "0", "0.29289321881345247559915563789515096071516406231153",
    "0", "0", "0.41421356237309504880168872420969807856967187537695",
    "-0.22654091966098642159975875368432884591861830351758", "0.22654091966098642159975875368432884591861830351758", "0.22654091966098642159975875368432884591861830351758",
    "0.41421356237309504880168872420969807856967187537695", "0", "0",
    "0.22654091966098642159975875368432884591861830351758", "-0.22654091966098642159975875368432884591861830351758", "0.22654091966098642159975875368432884591861830351758",
    "0.29289321881345247559915563789515096071516406231153", "0", "-0.29289321881345247559915563789515096071516406231153",
    "0", "-0.29289321881345247559915563789515096071516406231153", "0.29289321881345247559915563789515096071516406231153",
    "-0.41421356237309504880168872420969807856967187537695", "0", "0",
    "0.29289321881345247559915563789515096071516406231153", "-0.29289321881345247559915563789515096071516406231153", "0",
    "0", "-0.41421356237309504880168872420969807856967187537695", "0",
    "-0.22654091966098642159975875368432884591861830351758", "0.22654091966098642159975875368432884591861830351758", "-0.22654091966098642159975875368432884591861830351758",
    "0", "0", "-0.41421356237309504880168872420969807856967187537695",
    "-0.22654091966098642159975875368432884591861830351758", "-0.22654091966098642159975875368432884591861830351758", "0.22654091966098642159975875368432884591861830351758",
    "0.22654091966098642159975875368432884591861830351758", "-0.22654091966098642159975875368432884591861830351758", "-0.22654091966098642159975875368432884591861830351758",
    "0", "-0.29289321881345247559915563789515096071516406231153", "-0.29289321881345247559915563789515096071516406231153",
    "-0.29289321881345247559915563789515096071516406231153", "0", "-0.29289321881345247559915563789515096071516406231153",
    "-0.29289321881345247559915563789515096071516406231153", "-0.29289321881345247559915563789515096071516406231153", "0",
    "-0.22654091966098642159975875368432884591861830351758", "-0.22654091966098642159975875368432884591861830351758", "-0.22654091966098642159975875368432884591861830351758",
};
const char* const k_disdyakis_dodecahedron[] = {
    "0.13807118745769834960056290806989935952322395845898", "0.13807118745769834960056290806989935952322395845898", "0.13807118745769834960056290806989935952322395845898",
    "0.16018862050852036760036186947350673112207254472363", "0.16018862050852036760036186947350673112207254472363", "0",
    "0.26120387496374144251476820691705659387704910725056", "0", "0",
    "0.13807118745769834960056290806989935952322395845898", "0.13807118745769834960056290806989935952322395845898", "-0.13807118745769834960056290806989935952322395845898",
    "-0.26120387496374144251476820691705659387704910725056", "0", "0",
    "0", "0", "0.26120387496374144251476820691705659387704910725056",
    "0.13807118745769834960056290806989935952322395845898", "-0.13807118745769834960056290806989935952322395845898", "0.13807118745769834960056290806989935952322395845898",
    "0", "0.26120387496374144251476820691705659387704910725056", "0",
    "-0.13807118745769834960056290806989935952322395845898", "0.13807118745769834960056290806989935952322395845898", "0.13807118745769834960056290806989935952322395845898",
    "0", "0", "-0.26120387496374144251476820691705659387704910725056",
    "0", "-0.26120387496374144251476820691705659387704910725056", "0",
    "0", "0.16018862050852036760036186947350673112207254472363", "0.16018862050852036760036186947350673112207254472363",
    "0.16018862050852036760036186947350673112207254472363", "0", "0.16018862050852036760036186947350673112207254472363",
    "0", "0.16018862050852036760036186947350673112207254472363", "-0.16018862050852036760036186947350673112207254472363",
    "-0.13807118745769834960056290806989935952322395845898", "0.13807118745769834960056290806989935952322395845898", "-0.13807118745769834960056290806989935952322395845898",
    "0.16018862050852036760036186947350673112207254472363", "-0.16018862050852036760036186947350673112207254472363", "0",
    "0.13807118745769834960056290806989935952322395845898", "-0.13807118745769834960056290806989935952322395845898", "-0.13807118745769834960056290806989935952322395845898",
    "-0.16018862050852036760036186947350673112207254472363", "0", "0.16018862050852036760036186947350673112207254472363",
    "-0.13807118745769834960056290806989935952322395845898", "-0.13807118745769834960056290806989935952322395845898", "0.13807118745769834960056290806989935952322395845898",
    "0", "-0.16018862050852036760036186947350673112207254472363", "0.16018862050852036760036186947350673112207254472363",
    "0.16018862050852036760036186947350673112207254472363", "0", "-0.16018862050852036760036186947350673112207254472363",
    "-0.16018862050852036760036186947350673112207254472363", "0.16018862050852036760036186947350673112207254472363", "0",
    "0", "-0.16018862050852036760036186947350673112207254472363", "-0.16018862050852036760036186947350673112207254472363",
    "-0.16018862050852036760036186947350673112207254472363", "-0.16018862050852036760036186947350673112207254472363", "0",
    "-0.16018862050852036760036186947350673112207254472363", "0", "-0.16018862050852036760036186947350673112207254472363",
    "-0.13807118745769834960056290806989935952322395845898", "-0.13807118745769834960056290806989935952322395845898", "-0.13807118745769834960056290806989935952322395845898",
};
const char* const k_pentagonal_icositetrahedron[] = {
    "0.40880451495583045803800681429692277220204910310678", "-0.087378025384152723141711943603495973050406595301968", "0.29559774252208477098099659285153861389897544844661",
    "0.29559774252208477098099659285153861389897544844661", "0.29559774252208477098099659285153861389897544844661", "-0.29559774252208477098099659285153861389897544844661",
    "0.54368901269207636157085597180174798652520329765098", "-1.7695854209198698210047422534201531605850344872402e-81", "0",
    "0.29559774252208477098099659285153861389897544844661", "-0.29559774252208477098099659285153861389897544844661", "0.29559774252208477098099659285153861389897544844661",
    "-0.29559774252208477098099659285153861389897544844661", "0.29559774252208477098099659285153861389897544844661", "0.29559774252208477098099659285153861389897544844661",
    "-0.29559774252208477098099659285153861389897544844661", "-0.29559774252208477098099659285153861389897544844661", "-0.29559774252208477098099659285153861389897544844661",
    "0.29559774252208477098099659285153861389897544844661", "-0.40880451495583045803800681429692277220204910310678", "0.087378025384152723141711943603495973050406595301968",
    "0", "-0.54368901269207636157085597180174798652520329765098", "1.7695854209198698210047422534201531605850344872402e-81",
    "0.087378025384152723141711943603495973050406595301968", "0.29559774252208477098099659285153861389897544844661", "-0.40880451495583045803800681429692277220204910310678",
    "1.7695854209198698210047422534201531605850344872402e-81", "0", "-0.54368901269207636157085597180174798652520329765098",
    "-0.40880451495583045803800681429692277220204910310678", "0.087378025384152723141711943603495973050406595301968", "0.29559774252208477098099659285153861389897544844661",
    "-0.54368901269207636157085597180174798652520329765098", "1.7695854209198698210047422534201531605850344872402e-81", "0",
    "0", "0.54368901269207636157085597180174798652520329765098", "-1.7695854209198698210047422534201531605850344872402e-81",
    "-0.29559774252208477098099659285153861389897544844661", "0.40880451495583045803800681429692277220204910310678", "0.087378025384152723141711943603495973050406595301968",
    "-0.087378025384152723141711943603495973050406595301968", "0.40880451495583045803800681429692277220204910310678", "-0.29559774252208477098099659285153861389897544844661",
    "-1.7695854209198698210047422534201531605850344872402e-81", "0", "0.54368901269207636157085597180174798652520329765098",
    "0.087378025384152723141711943603495973050406595301968", "-0.29559774252208477098099659285153861389897544844661", "0.40880451495583045803800681429692277220204910310678",
    "-0.29559774252208477098099659285153861389897544844661", "-0.087378025384152723141711943603495973050406595301968", "0.40880451495583045803800681429692277220204910310678",
    "0.40880451495583045803800681429692277220204910310678", "0.087378025384152723141711943603495973050406595301968", "-0.29559774252208477098099659285153861389897544844661",
    "0.40880451495583045803800681429692277220204910310678", "-0.29559774252208477098099659285153861389897544844661", "-0.087378025384152723141711943603495973050406595301968",
    "-0.29559774252208477098099659285153861389897544844661", "-0.40880451495583045803800681429692277220204910310678", "-0.087378025384152723141711943603495973050406595301968",
    "-0.40880451495583045803800681429692277220204910310678", "-0.29559774252208477098099659285153861389897544844661", "0.087378025384152723141711943603495973050406595301968",
    "-0.087378025384152723141711943603495973050406595301968", "-0.40880451495583045803800681429692277220204910310678", "0.29559774252208477098099659285153861389897544844661",
    "-0.29559774252208477098099659285153861389897544844661", "-0.29559774252208477098099659285153861389897544844661", "0.29559774252208477098099659285153861389897544844661",
    "-0.087378025384152723141711943603495973050406595301968", "-0.29559774252208477098099659285153861389897544844661", "-0.40880451495583045803800681429692277220204910310678",
    "0.087378025384152723141711943603495973050406595301968", "-0.40880451495583045803800681429692277220204910310678", "-0.29559774252208477098099659285153861389897544844661",
    "0.29559774252208477098099659285153861389897544844661", "-0.087378025384152723141711943603495973050406595301968", "-0.40880451495583045803800681429692277220204910310678",
    "0.29559774252208477098099659285153861389897544844661", "-0.29559774252208477098099659285153861389897544844661", "-0.29559774252208477098099659285153861389897544844661",
    "-0.40880451495583045803800681429692277220204910310678", "-0.087378025384152723141711943603495973050406595301968", "-0.29559774252208477098099659285153861389897544844661",
    "-0.29559774252208477098099659285153861389897544844661", "0.087378025384152723141711943603495973050406595301968", "-0.40880451495583045803800681429692277220204910310678",
    "-0.40880451495583045803800681429692277220204910310678", "0.29559774252208477098099659285153861389897544844661", "-0.087378025384152723141711943603495973050406595301968",
    "-0.29559774252208477098099659285153861389897544844661", "0.29559774252208477098099659285153861389897544844661", "-0.29559774252208477098099659285153861389897544844661",
    "0.40880451495583045803800681429692277220204910310678", "0.29559774252208477098099659285153861389897544844661", "0.087378025384152723141711943603495973050406595301968",
    "0.29559774252208477098099659285153861389897544844661", "0.40880451495583045803800681429692277220204910310678", "-0.087378025384152723141711943603495973050406595301968",
    "-0.087378025384152723141711943603495973050406595301968", "0.29559774252208477098099659285153861389897544844661", "0.40880451495583045803800681429692277220204910310678",
    "0.29559774252208477098099659285153861389897544844661", "0.087378025384152723141711943603495973050406595301968", "0.40880451495583045803800681429692277220204910310678",
    "0.29559774252208477098099659285153861389897544844661", "0.29559774252208477098099659285153861389897544844661", "0.29559774252208477098099659285153861389897544844661",
    "0.087378025384152723141711943603495973050406595301968", "0.40880451495583045803800681429692277220204910310678", "0.29559774252208477098099659285153861389897544844661",
};
const char* const k_rhombic_triacontahedron[] = {
    "0", "0.61803398874989484820458683436563811772030917980576", "0.38196601125010515179541316563436188227969082019424",
    "0.38196601125010515179541316563436188227969082019424", "0", "0.61803398874989484820458683436563811772030917980576",
    "0.61803398874989484820458683436563811772030917980576", "0.38196601125010515179541316563436188227969082019424", "0",
    "0.38196601125010515179541316563436188227969082019424", "0.38196601125010515179541316563436188227969082019424", "0.38196601125010515179541316563436188227969082019424",
    "0", "-0.61803398874989484820458683436563811772030917980576", "0.38196601125010515179541316563436188227969082019424",
    "-0.61803398874989484820458683436563811772030917980576", "0.38196601125010515179541316563436188227969082019424", "0",
    "0.38196601125010515179541316563436188227969082019424", "0", "-0.61803398874989484820458683436563811772030917980576",
    "0", "0.23606797749978969640917366873127623544061835961153", "0.61803398874989484820458683436563811772030917980576",
    "-0.38196601125010515179541316563436188227969082019424", "0", "0.61803398874989484820458683436563811772030917980576",
    "-0.38196601125010515179541316563436188227969082019424", "0.38196601125010515179541316563436188227969082019424", "0.38196601125010515179541316563436188227969082019424",
    "0.23606797749978969640917366873127623544061835961153", "0.61803398874989484820458683436563811772030917980576", "0",
    "0", "0.61803398874989484820458683436563811772030917980576", "-0.38196601125010515179541316563436188227969082019424",
    "0.38196601125010515179541316563436188227969082019424", "0.38196601125010515179541316563436188227969082019424", "-0.38196601125010515179541316563436188227969082019424",
    "0.61803398874989484820458683436563811772030917980576", "0", "0.23606797749978969640917366873127623544061835961153",
    "0.61803398874989484820458683436563811772030917980576", "-0.38196601125010515179541316563436188227969082019424", "0",
    "0.38196601125010515179541316563436188227969082019424", "-0.38196601125010515179541316563436188227969082019424", "0.38196601125010515179541316563436188227969082019424",
    "0", "0.23606797749978969640917366873127623544061835961153", "-0.61803398874989484820458683436563811772030917980576",
    "-0.38196601125010515179541316563436188227969082019424", "0", "-0.61803398874989484820458683436563811772030917980576",
    "0.23606797749978969640917366873127623544061835961153", "-0.61803398874989484820458683436563811772030917980576", "0",
    "0", "-0.61803398874989484820458683436563811772030917980576", "-0.38196601125010515179541316563436188227969082019424",
    "-0.61803398874989484820458683436563811772030917980576", "0", "0.23606797749978969640917366873127623544061835961153",
    "-0.61803398874989484820458683436563811772030917980576", "-0.38196601125010515179541316563436188227969082019424", "0",
    "0", "-0.23606797749978969640917366873127623544061835961153", "0.61803398874989484820458683436563811772030917980576",
    "-0.38196601125010515179541316563436188227969082019424", "-0.38196601125010515179541316563436188227969082019424", "0.38196601125010515179541316563436188227969082019424",
    "-0.23606797749978969640917366873127623544061835961153", "0.61803398874989484820458683436563811772030917980576", "0",
    "-0.38196601125010515179541316563436188227969082019424", "0.38196601125010515179541316563436188227969082019424", "-0.38196601125010515179541316563436188227969082019424",
    "0.61803398874989484820458683436563811772030917980576", "0", "-0.23606797749978969640917366873127623544061835961153",
    "0.38196601125010515179541316563436188227969082019424", "-0.38196601125010515179541316563436188227969082019424", "-0.38196601125010515179541316563436188227969082019424",
    "0", "-0.23606797749978969640917366873127623544061835961153", "-0.61803398874989484820458683436563811772030917980576",
    "-0.23606797749978969640917366873127623544061835961153", "-0.61803398874989484820458683436563811772030917980576", "0",
    "-0.61803398874989484820458683436563811772030917980576", "0", "-0.23606797749978969640917366873127623544061835961153",
    "-0.38196601125010515179541316563436188227969082019424", "-0.38196601125010515179541316563436188227969082019424", "-0.38196601125010515179541316563436188227969082019424",
};
const char* const k_triakis_icosahedron[] = {
    "0.17082039324993690892275210061938287063218550788346", "0", "0.27639320225002103035908263312687237645593816403885",
    "0", "0.27639320225002103035908263312687237645593816403885", "0.17082039324993690892275210061938287063218550788346",
    "0.27639320225002103035908263312687237645593816403885", "0.17082039324993690892275210061938287063218550788346", "0",
    "-2.2011294351345866809420828692939086421296002493285e-81", "0.27639320225002103035908263312687237645593816403885", "-0.17082039324993690892275210061938287063218550788346",
    "0.17082039324993690892275210061938287063218550788346", "0", "-0.27639320225002103035908263312687237645593816403885",
    "0.27639320225002103035908263312687237645593816403885", "-0.17082039324993690892275210061938287063218550788346", "-2.2011294351345866809420828692939086421296002493285e-81",
    "-2.2011294351345866809420828692939086421296002493285e-81", "-0.27639320225002103035908263312687237645593816403885", "0.17082039324993690892275210061938287063218550788346",
    "-0.17082039324993690892275210061938287063218550788346", "0", "0.27639320225002103035908263312687237645593816403885",
    "-0.27639320225002103035908263312687237645593816403885", "0.17082039324993690892275210061938287063218550788346", "-2.2011294351345866809420828692939086421296002493285e-81",
    "0", "-0.27639320225002103035908263312687237645593816403885", "-0.17082039324993690892275210061938287063218550788346",
    "-0.27639320225002103035908263312687237645593816403885", "-0.17082039324993690892275210061938287063218550788346", "0",
    "-0.17082039324993690892275210061938287063218550788346", "0", "-0.27639320225002103035908263312687237645593816403885",
    "0", "0.099106358522679476456630379257108235327413263548074", "0.25946381511360768587397822755426494119644795812884",
    "0.099106358522679476456630379257108235327413263548074", "0.25946381511360768587397822755426494119644795812884", "0",
    "0.25946381511360768587397822755426494119644795812884", "0", "0.099106358522679476456630379257108235327413263548074",
    "0", "0.099106358522679476456630379257108235327413263548074", "-0.25946381511360768587397822755426494119644795812884",
    "0.099106358522679476456630379257108235327413263548074", "-0.25946381511360768587397822755426494119644795812884", "0",
    "-0.25946381511360768587397822755426494119644795812884", "0", "0.099106358522679476456630379257108235327413263548074",
    "0", "-0.099106358522679476456630379257108235327413263548074", "0.25946381511360768587397822755426494119644795812884",
    "-0.099106358522679476456630379257108235327413263548074", "0.25946381511360768587397822755426494119644795812884", "0",
    "0.25946381511360768587397822755426494119644795812884", "0", "-0.099106358522679476456630379257108235327413263548074",
    "0", "-0.099106358522679476456630379257108235327413263548074", "-0.25946381511360768587397822755426494119644795812884",
    "-0.099106358522679476456630379257108235327413263548074", "-0.25946381511360768587397822755426494119644795812884", "0",
    "-0.25946381511360768587397822755426494119644795812884", "0", "-0.099106358522679476456630379257108235327413263548074",
    "0.16035745659092820941734784829715670586903469458077", "0.16035745659092820941734784829715670586903469458077", "0.16035745659092820941734784829715670586903469458077",
    "-0.16035745659092820941734784829715670586903469458077", "0.16035745659092820941734784829715670586903469458077", "0.16035745659092820941734784829715670586903469458077",
    "0.16035745659092820941734784829715670586903469458077", "0.16035745659092820941734784829715670586903469458077", "-0.16035745659092820941734784829715670586903469458077",
    "0.16035745659092820941734784829715670586903469458077", "-0.16035745659092820941734784829715670586903469458077", "0.16035745659092820941734784829715670586903469458077",
    "-0.16035745659092820941734784829715670586903469458077", "-0.16035745659092820941734784829715670586903469458077", "0.16035745659092820941734784829715670586903469458077",
    "-0.16035745659092820941734784829715670586903469458077", "0.16035745659092820941734784829715670586903469458077", "-0.16035745659092820941734784829715670586903469458077",
    "0.16035745659092820941734784829715670586903469458077", "-0.16035745659092820941734784829715670586903469458077", "-0.16035745659092820941734784829715670586903469458077",
    "-0.16035745659092820941734784829715670586903469458077", "-0.16035745659092820941734784829715670586903469458077", "-0.16035745659092820941734784829715670586903469458077",
};
const char* const k_pentakis_dodecahedron[] = {
    "7.1586867523285785356377695671208443859815577796901e-82", "0.20601132958329828273486227812187937257343639326859", "-0.078689325833263232136391222910425411813539453203842",
    "0", "0.20601132958329828273486227812187937257343639326859", "0.078689325833263232136391222910425411813539453203842",
    "0.20601132958329828273486227812187937257343639326859", "0.078689325833263232136391222910425411813539453203842", "0",
    "0.078689325833263232136391222910425411813539453203842", "0", "0.20601132958329828273486227812187937257343639326859",
    "0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475",
    "0", "0.11294200177633239238874944720542556035995118213593", "-0.18274399763155681014833407039276591952006509048542",
    "0.20601132958329828273486227812187937257343639326859", "-0.078689325833263232136391222910425411813539453203842", "7.1586867523285785356377695671208443859815577796901e-82",
    "-0.078689325833263232136391222910425411813539453203842", "0", "0.20601132958329828273486227812187937257343639326859",
    "7.1586867523285785356377695671208443859815577796901e-82", "-0.20601132958329828273486227812187937257343639326859", "0.078689325833263232136391222910425411813539453203842",
    "-0.20601132958329828273486227812187937257343639326859", "0.078689325833263232136391222910425411813539453203842", "7.1586867523285785356377695671208443859815577796901e-82",
    "0.078689325833263232136391222910425411813539453203842", "0", "-0.20601132958329828273486227812187937257343639326859",
    "0", "-0.20601132958329828273486227812187937257343639326859", "-0.078689325833263232136391222910425411813539453203842",
    "-0.20601132958329828273486227812187937257343639326859", "-0.078689325833263232136391222910425411813539453203842", "0",
    "-0.078689325833263232136391222910425411813539453203842", "0", "-0.20601132958329828273486227812187937257343639326859",
    "0", "0.11294200177633239238874944720542556035995118213593", "0.18274399763155681014833407039276591952006509048542",
    "-0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475",
    "0.11294200177633239238874944720542556035995118213593", "0.18274399763155681014833407039276591952006509048542", "0",
    "0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475",
    "0.18274399763155681014833407039276591952006509048542", "0", "0.11294200177633239238874944720542556035995118213593",
    "0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475",
    "0.11294200177633239238874944720542556035995118213593", "-0.18274399763155681014833407039276591952006509048542", "0",
    "-0.18274399763155681014833407039276591952006509048542", "0", "0.11294200177633239238874944720542556035995118213593",
    "0", "-0.11294200177633239238874944720542556035995118213593", "0.18274399763155681014833407039276591952006509048542",
    "-0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475",
    "-0.11294200177633239238874944720542556035995118213593", "0.18274399763155681014833407039276591952006509048542", "0",
    "-0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475",
    "0.18274399763155681014833407039276591952006509048542", "0", "-0.11294200177633239238874944720542556035995118213593",
    "0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475",
    "0", "-0.11294200177633239238874944720542556035995118213593", "-0.18274399763155681014833407039276591952006509048542",
    "-0.11294200177633239238874944720542556035995118213593", "-0.18274399763155681014833407039276591952006509048542", "0",
    "-0.18274399763155681014833407039276591952006509048542", "0", "-0.11294200177633239238874944720542556035995118213593",
    "-0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475",
};
const char* const k_deltoidal_hexecontahedron[] = {
    "-0.23606797749978969640917366873127623544061835961153", "0", "0",
    "0", "0", "0.23606797749978969640917366873127623544061835961153",
    "0", "0.23606797749978969640917366873127623544061835961153", "0",
    "0.23606797749978969640917366873127623544061835961153", "0", "0",
    "0", "0", "-0.23606797749978969640917366873127623544061835961153",
    "0", "-0.23606797749978969640917366873127623544061835961153", "0",
    "0.12732200375003505059847105521145396075989694006475", "-2.6545870366515971965398221741430070117127561388983e-81", "0.20601132958329828273486227812187937257343639326859",
    "-2.6545870366515971965398221741430070117127561388983e-81", "0.20601132958329828273486227812187937257343639326859", "0.12732200375003505059847105521145396075989694006475",
    "0.072949016875157727693119748451542823419536230291356", "0.11803398874989484820458683436563811772030917980576", "0.19098300562505257589770658281718094113984541009712",
    "0.20601132958329828273486227812187937257343639326859", "0.12732200375003505059847105521145396075989694006475", "-2.6545870366515971965398221741430070117127561388983e-81",
    "0.11803398874989484820458683436563811772030917980576", "0.19098300562505257589770658281718094113984541009712", "0.072949016875157727693119748451542823419536230291356",
    "0.19098300562505257589770658281718094113984541009712", "0.072949016875157727693119748451542823419536230291356", "0.11803398874989484820458683436563811772030917980576",
    "0.13383054136359812661984975795114113371647606538391", "0.13383054136359812661984975795114113371647606538391", "0.13383054136359812661984975795114113371647606538391",
    "0.12732200375003505059847105521145396075989694006475", "0", "-0.20601132958329828273486227812187937257343639326859",
    "0", "-0.20601132958329828273486227812187937257343639326859", "0.12732200375003505059847105521145396075989694006475",
    "-0.20601132958329828273486227812187937257343639326859", "0.12732200375003505059847105521145396075989694006475", "0",
    "0.072949016875157727693119748451542823419536230291356", "-0.11803398874989484820458683436563811772030917980576", "0.19098300562505257589770658281718094113984541009712",
    "-0.11803398874989484820458683436563811772030917980576", "0.19098300562505257589770658281718094113984541009712", "0.072949016875157727693119748451542823419536230291356",
    "0.19098300562505257589770658281718094113984541009712", "0.072949016875157727693119748451542823419536230291356", "-0.11803398874989484820458683436563811772030917980576",
    "-0.12732200375003505059847105521145396075989694006475", "0", "0.20601132958329828273486227812187937257343639326859",
    "-0.19098300562505257589770658281718094113984541009712", "0.072949016875157727693119748451542823419536230291356", "0.11803398874989484820458683436563811772030917980576",
    "-0.072949016875157727693119748451542823419536230291356", "0.11803398874989484820458683436563811772030917980576", "0.19098300562505257589770658281718094113984541009712",
    "-0.13383054136359812661984975795114113371647606538391", "0.13383054136359812661984975795114113371647606538391", "0.13383054136359812661984975795114113371647606538391",
    "0", "0.20601132958329828273486227812187937257343639326859", "-0.12732200375003505059847105521145396075989694006475",
    "0.072949016875157727693119748451542823419536230291356", "0.11803398874989484820458683436563811772030917980576", "-0.19098300562505257589770658281718094113984541009712",
    "0.11803398874989484820458683436563811772030917980576", "0.19098300562505257589770658281718094113984541009712", "-0.072949016875157727693119748451542823419536230291356",
    "0.13383054136359812661984975795114113371647606538391", "0.13383054136359812661984975795114113371647606538391", "-0.13383054136359812661984975795114113371647606538391",
    "0.20601132958329828273486227812187937257343639326859", "-0.12732200375003505059847105521145396075989694006475", "0",
    "0.11803398874989484820458683436563811772030917980576", "-0.19098300562505257589770658281718094113984541009712", "0.072949016875157727693119748451542823419536230291356",
    "0.19098300562505257589770658281718094113984541009712", "-0.072949016875157727693119748451542823419536230291356", "0.11803398874989484820458683436563811772030917980576",
    "0.13383054136359812661984975795114113371647606538391", "-0.13383054136359812661984975795114113371647606538391", "0.13383054136359812661984975795114113371647606538391",
    "-0.12732200375003505059847105521145396075989694006475", "-2.6545870366515971965398221741430070117127561388983e-81", "-0.20601132958329828273486227812187937257343639326859",
    "-0.19098300562505257589770658281718094113984541009712", "0.072949016875157727693119748451542823419536230291356", "-0.11803398874989484820458683436563811772030917980576",
    "-2.6545870366515971965398221741430070117127561388983e-81", "-0.20601132958329828273486227812187937257343639326859", "-0.12732200375003505059847105521145396075989694006475",
    "0.072949016875157727693119748451542823419536230291356", "-0.11803398874989484820458683436563811772030917980576", "-0.19098300562505257589770658281718094113984541009712",
    "-0.20601132958329828273486227812187937257343639326859", "-0.12732200375003505059847105521145396075989694006475", "-2.6545870366515971965398221741430070117127561388983e-81",
    "-0.11803398874989484820458683436563811772030917980576", "-0.19098300562505257589770658281718094113984541009712", "0.072949016875157727693119748451542823419536230291356",
    "-0.19098300562505257589770658281718094113984541009712", "-0.072949016875157727693119748451542823419536230291356", "0.11803398874989484820458683436563811772030917980576",
    "-0.072949016875157727693119748451542823419536230291356", "-0.11803398874989484820458683436563811772030917980576", "0.19098300562505257589770658281718094113984541009712",
    "-0.13383054136359812661984975795114113371647606538391", "-0.13383054136359812661984975795114113371647606538391", "0.13383054136359812661984975795114113371647606538391",
    "-0.072949016875157727693119748451542823419536230291356", "0.11803398874989484820458683436563811772030917980576", "-0.19098300562505257589770658281718094113984541009712",
    "-0.11803398874989484820458683436563811772030917980576", "0.19098300562505257589770658281718094113984541009712", "-0.072949016875157727693119748451542823419536230291356",
    "-0.13383054136359812661984975795114113371647606538391", "0.13383054136359812661984975795114113371647606538391", "-0.13383054136359812661984975795114113371647606538391",
    "0.11803398874989484820458683436563811772030917980576", "-0.19098300562505257589770658281718094113984541009712", "-0.072949016875157727693119748451542823419536230291356",
    "0.19098300562505257589770658281718094113984541009712", "-0.072949016875157727693119748451542823419536230291356", "-0.11803398874989484820458683436563811772030917980576",
    "0.13383054136359812661984975795114113371647606538391", "-0.13383054136359812661984975795114113371647606538391", "-0.13383054136359812661984975795114113371647606538391",
    "-0.072949016875157727693119748451542823419536230291356", "-0.11803398874989484820458683436563811772030917980576", "-0.19098300562505257589770658281718094113984541009712",
    "-0.11803398874989484820458683436563811772030917980576", "-0.19098300562505257589770658281718094113984541009712", "-0.072949016875157727693119748451542823419536230291356",
    "-0.19098300562505257589770658281718094113984541009712", "-0.072949016875157727693119748451542823419536230291356", "-0.11803398874989484820458683436563811772030917980576",
    "-0.13383054136359812661984975795114113371647606538391", "-0.13383054136359812661984975795114113371647606538391", "-0.13383054136359812661984975795114113371647606538391",
    "0.21654236465910046834503756051221471657088098365402", "0", "0.082711823295502341725187802561073582854404918270108",
    "0", "0.082711823295502341725187802561073582854404918270108", "0.21654236465910046834503756051221471657088098365402",
    "0.082711823295502341725187802561073582854404918270108", "0.21654236465910046834503756051221471657088098365402", "0",
    "0.21654236465910046834503756051221471657088098365402", "0", "-0.082711823295502341725187802561073582854404918270108",
    "0", "-0.082711823295502341725187802561073582854404918270108", "0.21654236465910046834503756051221471657088098365402",
    "-0.082711823295502341725187802561073582854404918270108", "0.21654236465910046834503756051221471657088098365402", "0",
    "-0.21654236465910046834503756051221471657088098365402", "0", "0.082711823295502341725187802561073582854404918270108",
    "0", "0.082711823295502341725187802561073582854404918270108", "-0.21654236465910046834503756051221471657088098365402",
    "0.082711823295502341725187802561073582854404918270108", "-0.21654236465910046834503756051221471657088098365402", "0",
    "-0.21654236465910046834503756051221471657088098365402", "0", "-0.082711823295502341725187802561073582854404918270108",
    "0", "-0.082711823295502341725187802561073582854404918270108", "-0.21654236465910046834503756051221471657088098365402",
    "-0.082711823295502341725187802561073582854404918270108", "-0.21654236465910046834503756051221471657088098365402", "0",
};
const char* const k_disdyakis_triacontahedron[] = {
    "-0.21654236465910046834503756051221471657088098365402", "0", "0",
    "0", "0", "0.21654236465910046834503756051221471657088098365402",
    "0", "0.21654236465910046834503756051221471657088098365402", "0",
    "0.21654236465910046834503756051221471657088098365402", "0", "0",
    "0", "0", "-0.21654236465910046834503756051221471657088098365402",
    "0", "-0.21654236465910046834503756051221471657088098365402", "0",
    "0.12360679774997896964091736687312762354406183596115", "0", "0.2",
    "0", "0.078689325833263232136391222910425411813539453203842", "0.20601132958329828273486227812187937257343639326859",
    "0.078689325833263232136391222910425411813539453203842", "0.20601132958329828273486227812187937257343639326859", "-1.8741685232409819065508576091146700458151042457544e-81",
    "0", "0.2", "0.12360679774997896964091736687312762354406183596115",
    "0.20601132958329828273486227812187937257343639326859", "-1.8741685232409819065508576091146700458151042457544e-81", "0.078689325833263232136391222910425411813539453203842",
    "0.2", "0.12360679774997896964091736687312762354406183596115", "0",
    "0.12360679774997896964091736687312762354406183596115", "0", "-0.2",
    "0", "0.078689325833263232136391222910425411813539453203842", "-0.20601132958329828273486227812187937257343639326859",
    "0", "-0.2", "0.12360679774997896964091736687312762354406183596115",
    "0.078689325833263232136391222910425411813539453203842", "-0.20601132958329828273486227812187937257343639326859", "0",
    "-0.2", "0.12360679774997896964091736687312762354406183596115", "0",
    "-0.20601132958329828273486227812187937257343639326859", "0", "0.078689325833263232136391222910425411813539453203842",
    "0", "-0.078689325833263232136391222910425411813539453203842", "0.20601132958329828273486227812187937257343639326859",
    "-0.078689325833263232136391222910425411813539453203842", "0.20601132958329828273486227812187937257343639326859", "0",
    "0.20601132958329828273486227812187937257343639326859", "0", "-0.078689325833263232136391222910425411813539453203842",
    "0", "-0.078689325833263232136391222910425411813539453203842", "-0.20601132958329828273486227812187937257343639326859",
    "-0.078689325833263232136391222910425411813539453203842", "-0.20601132958329828273486227812187937257343639326859", "-1.8741685232409819065508576091146700458151042457544e-81",
    "-0.20601132958329828273486227812187937257343639326859", "-1.8741685232409819065508576091146700458151042457544e-81", "-0.078689325833263232136391222910425411813539453203842",
    "-0.12360679774997896964091736687312762354406183596115", "0", "0.2",
    "0", "0.2", "-0.12360679774997896964091736687312762354406183596115",
    "0.2", "-0.12360679774997896964091736687312762354406183596115", "0",
    "-0.12360679774997896964091736687312762354406183596115", "0", "-0.2",
    "0", "-0.2", "-0.12360679774997896964091736687312762354406183596115",
    "-0.2", "-0.12360679774997896964091736687312762354406183596115", "0",
    "0.066915270681799063309924878975570566858238032691957", "0.10827118232955023417251878025610735828544049182701", "0.17518645301134929748244365923167792514367852451897",
    "0.10827118232955023417251878025610735828544049182701", "0.17518645301134929748244365923167792514367852451897", "0.066915270681799063309924878975570566858238032691957",
    "0.17518645301134929748244365923167792514367852451897", "0.066915270681799063309924878975570566858238032691957", "0.10827118232955023417251878025610735828544049182701",
    "0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475",
    "0.066915270681799063309924878975570566858238032691957", "0.10827118232955023417251878025610735828544049182701", "-0.17518645301134929748244365923167792514367852451897",
    "0.10827118232955023417251878025610735828544049182701", "-0.17518645301134929748244365923167792514367852451897", "0.066915270681799063309924878975570566858238032691957",
    "-0.17518645301134929748244365923167792514367852451897", "0.066915270681799063309924878975570566858238032691957", "0.10827118232955023417251878025610735828544049182701",
    "0.066915270681799063309924878975570566858238032691957", "-0.10827118232955023417251878025610735828544049182701", "0.17518645301134929748244365923167792514367852451897",
    "-0.10827118232955023417251878025610735828544049182701", "0.17518645301134929748244365923167792514367852451897", "0.066915270681799063309924878975570566858238032691957",
    "0.17518645301134929748244365923167792514367852451897", "0.066915270681799063309924878975570566858238032691957", "-0.10827118232955023417251878025610735828544049182701",
    "0.066915270681799063309924878975570566858238032691957", "-0.10827118232955023417251878025610735828544049182701", "-0.17518645301134929748244365923167792514367852451897",
    "-0.10827118232955023417251878025610735828544049182701", "-0.17518645301134929748244365923167792514367852451897", "0.066915270681799063309924878975570566858238032691957",
    "-0.17518645301134929748244365923167792514367852451897", "0.066915270681799063309924878975570566858238032691957", "-0.10827118232955023417251878025610735828544049182701",
    "-0.066915270681799063309924878975570566858238032691957", "0.10827118232955023417251878025610735828544049182701", "0.17518645301134929748244365923167792514367852451897",
    "-0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475",
    "0.10827118232955023417251878025610735828544049182701", "0.17518645301134929748244365923167792514367852451897", "-0.066915270681799063309924878975570566858238032691957",
    "0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475",
    "0.17518645301134929748244365923167792514367852451897", "-0.066915270681799063309924878975570566858238032691957", "0.10827118232955023417251878025610735828544049182701",
    "0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475",
    "-0.066915270681799063309924878975570566858238032691957", "0.10827118232955023417251878025610735828544049182701", "-0.17518645301134929748244365923167792514367852451897",
    "0.10827118232955023417251878025610735828544049182701", "-0.17518645301134929748244365923167792514367852451897", "-0.066915270681799063309924878975570566858238032691957",
    "-0.17518645301134929748244365923167792514367852451897", "-0.066915270681799063309924878975570566858238032691957", "0.10827118232955023417251878025610735828544049182701",
    "-0.066915270681799063309924878975570566858238032691957", "-0.10827118232955023417251878025610735828544049182701", "0.17518645301134929748244365923167792514367852451897",
    "-0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475",
    "-0.10827118232955023417251878025610735828544049182701", "0.17518645301134929748244365923167792514367852451897", "-0.066915270681799063309924878975570566858238032691957",
    "-0.12732200375003505059847105521145396075989694006475", "0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475",
    "0.17518645301134929748244365923167792514367852451897", "-0.066915270681799063309924878975570566858238032691957", "-0.10827118232955023417251878025610735828544049182701",
    "0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475",
    "-0.066915270681799063309924878975570566858238032691957", "-0.10827118232955023417251878025610735828544049182701", "-0.17518645301134929748244365923167792514367852451897",
    "-0.10827118232955023417251878025610735828544049182701", "-0.17518645301134929748244365923167792514367852451897", "-0.066915270681799063309924878975570566858238032691957",
    "-0.17518645301134929748244365923167792514367852451897", "-0.066915270681799063309924878975570566858238032691957", "-0.10827118232955023417251878025610735828544049182701",
    "-0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475", "-0.12732200375003505059847105521145396075989694006475",
};
const char* const k_pentagonal_hexecontahedron[] = {
    "0.10474140449711317780033763297727268187273231366267", "0.10914818393094388443677304426769420482379875618894", "0.18725042211381423555654943028473054220607461862179",
    "0.18725042211381423555654943028473054220607461862179", "0.10474140449711317780033763297727268187273231366267", "0.10914818393094388443677304426769420482379875618894",
    "0.10914818393094388443677304426769420482379875618894", "0.18725042211381423555654943028473054220607461862179", "0.10474140449711317780033763297727268187273231366267",
    "0.13898058431936053312045171694301828235956701564627", "0.13898058431936053312045171694301828235956701564627", "0.13898058431936053312045171694301828235956701564627",
    "0.064547807724177724244925957783982692285419129368729", "0.093795596093790630859638028859164188485829711470596", "-0.21209143104959643553482609006949051545541875819738",
    "0.093795596093790630859638028859164188485829711470596", "-0.21209143104959643553482609006949051545541875819738", "0.064547807724177724244925957783982692285419129368729",
    "-0.21209143104959643553482609006949051545541875819738", "0.064547807724177724244925957783982692285419129368729", "0.093795596093790630859638028859164188485829711470596",
    "0.13269899534115205954334186623693052458668735642557", "1.3833470352103847314508134893637998645487877244953e-81", "0.21471148473494798038558129789119140842417585709834",
    "1.3833470352103847314508134893637998645487877244953e-81", "0.21471148473494798038558129789119140842417585709834", "0.13269899534115205954334186623693052458668735642557",
    "0.21471148473494798038558129789119140842417585709834", "0.13269899534115205954334186623693052458668735642557", "1.3833470352103847314508134893637998645487877244953e-81",
    "-5.5333881408415389258032539574551994581951508979811e-81", "-0.21471148473494798038558129789119140842417585709834", "0.13269899534115205954334186623693052458668735642557",
    "-0.21471148473494798038558129789119140842417585709834", "0.13269899534115205954334186623693052458668735642557", "-5.5333881408415389258032539574551994581951508979811e-81",
    "0.13269899534115205954334186623693052458668735642557", "-5.5333881408415389258032539574551994581951508979811e-81", "-0.21471148473494798038558129789119140842417585709834",
    "0.064547807724177724244925957783982692285419129368729", "-0.093795596093790630859638028859164188485829711470596", "0.21209143104959643553482609006949051545541875819738",
    "0.082809875316801679900506481951627313425011733438045", "-0.14463414356994800921145462352639321836837606947768", "0.17369599165512160868169900205167689710921788555767",
    "-0.093795596093790630859638028859164188485829711470596", "0.21209143104959643553482609006949051545541875819738", "0.064547807724177724244925957783982692285419129368729",
    "-0.14463414356994800921145462352639321836837606947768", "0.17369599165512160868169900205167689710921788555767", "0.082809875316801679900506481951627313425011733438045",
    "0.21209143104959643553482609006949051545541875819738", "0.064547807724177724244925957783982692285419129368729", "-0.093795596093790630859638028859164188485829711470596",
    "0.17369599165512160868169900205167689710921788555767", "0.082809875316801679900506481951627313425011733438045", "-0.14463414356994800921145462352639321836837606947768",
    "-0.23842973966373864007109265238555740685420578094828", "0.021931529180311497899831151025645368447720580224621", "-0.024841008935782199978276659784759973249344139575591",
    "0.10474140449711317780033763297727268187273231366267", "-0.10914818393094388443677304426769420482379875618894", "-0.18725042211381423555654943028473054220607461862179",
    "0.021931529180311497899831151025645368447720580224621", "0.024841008935782199978276659784759973249344139575591", "0.23842973966373864007109265238555740685420578094828",
    "0.024841008935782199978276659784759973249344139575591", "0.23842973966373864007109265238555740685420578094828", "0.021931529180311497899831151025645368447720580224621",
    "0.23842973966373864007109265238555740685420578094828", "0.021931529180311497899831151025645368447720580224621", "0.024841008935782199978276659784759973249344139575591",
    "0.042616278543866226345094806758337323837698549144108", "0.12928155573279475563431960811786320203040702475933", "0.19853700059090380865997566183643687035856202513326",
    "-1.1721286641284311358055658580998918982853123625407e-81", "0.08589472488568548007579050720948547939778203223789", "0.22487530920504601319624222415250376175734904788416",
    "0.12928155573279475563431960811786320203040702475933", "0.19853700059090380865997566183643687035856202513326", "0.042616278543866226345094806758337323837698549144108",
    "0.08589472488568548007579050720948547939778203223789", "0.22487530920504601319624222415250376175734904788416", "-1.1721286641284311358055658580998918982853123625407e-81",
    "0.19853700059090380865997566183643687035856202513326", "0.042616278543866226345094806758337323837698549144108", "0.12928155573279475563431960811786320203040702475933",
    "0.22487530920504601319624222415250376175734904788416", "-1.1721286641284311358055658580998918982853123625407e-81", "0.08589472488568548007579050720948547939778203223789",
    "-0.17369599165512160868169900205167689710921788555767", "0.082809875316801679900506481951627313425011733438045", "0.14463414356994800921145462352639321836837606947768",
    "-0.13898058431936053312045171694301828235956701564627", "0.13898058431936053312045171694301828235956701564627", "0.13898058431936053312045171694301828235956701564627",
    "-0.13269899534115205954334186623693052458668735642557", "-5.5333881408415389258032539574551994581951508979811e-81", "0.21471148473494798038558129789119140842417585709834",
    "-0.064547807724177724244925957783982692285419129368729", "0.093795596093790630859638028859164188485829711470596", "0.21209143104959643553482609006949051545541875819738",
    "-0.082809875316801679900506481951627313425011733438045", "0.14463414356994800921145462352639321836837606947768", "0.17369599165512160868169900205167689710921788555767",
    "0.082809875316801679900506481951627313425011733438045", "0.14463414356994800921145462352639321836837606947768", "-0.17369599165512160868169900205167689710921788555767",
    "0.13898058431936053312045171694301828235956701564627", "0.13898058431936053312045171694301828235956701564627", "-0.13898058431936053312045171694301828235956701564627",
    "-5.5333881408415389258032539574551994581951508979811e-81", "0.21471148473494798038558129789119140842417585709834", "-0.13269899534115205954334186623693052458668735642557",
    "0.093795596093790630859638028859164188485829711470596", "0.21209143104959643553482609006949051545541875819738", "-0.064547807724177724244925957783982692285419129368729",
    "0.14463414356994800921145462352639321836837606947768", "0.17369599165512160868169900205167689710921788555767", "-0.082809875316801679900506481951627313425011733438045",
    "0.14463414356994800921145462352639321836837606947768", "-0.17369599165512160868169900205167689710921788555767", "0.082809875316801679900506481951627313425011733438045",
    "0.13898058431936053312045171694301828235956701564627", "-0.13898058431936053312045171694301828235956701564627", "0.13898058431936053312045171694301828235956701564627",
    "0.21471148473494798038558129789119140842417585709834", "-0.13269899534115205954334186623693052458668735642557", "-5.5333881408415389258032539574551994581951508979811e-81",
    "0.21209143104959643553482609006949051545541875819738", "-0.064547807724177724244925957783982692285419129368729", "0.093795596093790630859638028859164188485829711470596",
    "0.17369599165512160868169900205167689710921788555767", "-0.082809875316801679900506481951627313425011733438045", "0.14463414356994800921145462352639321836837606947768",
    "0", "0.08589472488568548007579050720948547939778203223789", "-0.22487530920504601319624222415250376175734904788416",
    "0.08589472488568548007579050720948547939778203223789", "-0.22487530920504601319624222415250376175734904788416", "0",
    "-0.23842973966373864007109265238555740685420578094828", "-0.021931529180311497899831151025645368447720580224621", "0.024841008935782199978276659784759973249344139575591",
    "-0.22487530920504601319624222415250376175734904788416", "0", "0.08589472488568548007579050720948547939778203223789",
    "-0.18725042211381423555654943028473054220607461862179", "0.10474140449711317780033763297727268187273231366267", "-0.10914818393094388443677304426769420482379875618894",
    "-0.21471148473494798038558129789119140842417585709834", "-0.13269899534115205954334186623693052458668735642557", "1.3833470352103847314508134893637998645487877244953e-81",
    "-0.10914818393094388443677304426769420482379875618894", "-0.18725042211381423555654943028473054220607461862179", "0.10474140449711317780033763297727268187273231366267",
    "0", "-0.08589472488568548007579050720948547939778203223789", "0.22487530920504601319624222415250376175734904788416",
    "-0.042616278543866226345094806758337323837698549144108", "-0.12928155573279475563431960811786320203040702475933", "0.19853700059090380865997566183643687035856202513326",
    "-0.021931529180311497899831151025645368447720580224621", "-0.024841008935782199978276659784759973249344139575591", "0.23842973966373864007109265238555740685420578094828",
    "-0.08589472488568548007579050720948547939778203223789", "0.22487530920504601319624222415250376175734904788416", "0",
    "-0.12928155573279475563431960811786320203040702475933", "0.19853700059090380865997566183643687035856202513326", "-0.042616278543866226345094806758337323837698549144108",
    "-0.024841008935782199978276659784759973249344139575591", "0.23842973966373864007109265238555740685420578094828", "-0.021931529180311497899831151025645368447720580224621",
    "0.22487530920504601319624222415250376175734904788416", "0", "-0.08589472488568548007579050720948547939778203223789",
    "0.19853700059090380865997566183643687035856202513326", "-0.042616278543866226345094806758337323837698549144108", "-0.12928155573279475563431960811786320203040702475933",
    "0.23842973966373864007109265238555740685420578094828", "-0.021931529180311497899831151025645368447720580224621", "-0.024841008935782199978276659784759973249344139575591",
    "-0.19853700059090380865997566183643687035856202513326", "-0.042616278543866226345094806758337323837698549144108", "0.12928155573279475563431960811786320203040702475933",
    "-0.18725042211381423555654943028473054220607461862179", "-0.10474140449711317780033763297727268187273231366267", "0.10914818393094388443677304426769420482379875618894",
    "-0.13898058431936053312045171694301828235956701564627", "-0.13898058431936053312045171694301828235956701564627", "0.13898058431936053312045171694301828235956701564627",
    "-0.10474140449711317780033763297727268187273231366267", "-0.10914818393094388443677304426769420482379875618894", "0.18725042211381423555654943028473054220607461862179",
    "-0.042616278543866226345094806758337323837698549144108", "0.12928155573279475563431960811786320203040702475933", "-0.19853700059090380865997566183643687035856202513326",
    "-0.10474140449711317780033763297727268187273231366267", "0.10914818393094388443677304426769420482379875618894", "-0.18725042211381423555654943028473054220607461862179",
    "-0.13898058431936053312045171694301828235956701564627", "0.13898058431936053312045171694301828235956701564627", "-0.13898058431936053312045171694301828235956701564627",
    "-0.10914818393094388443677304426769420482379875618894", "0.18725042211381423555654943028473054220607461862179", "-0.10474140449711317780033763297727268187273231366267",
    "0.13898058431936053312045171694301828235956701564627", "-0.13898058431936053312045171694301828235956701564627", "-0.13898058431936053312045171694301828235956701564627",
    "0.12928155573279475563431960811786320203040702475933", "-0.19853700059090380865997566183643687035856202513326", "-0.042616278543866226345094806758337323837698549144108",
    "0.10914818393094388443677304426769420482379875618894", "-0.18725042211381423555654943028473054220607461862179", "-0.10474140449711317780033763297727268187273231366267",
    "0.18725042211381423555654943028473054220607461862179", "-0.10474140449711317780033763297727268187273231366267", "-0.10914818393094388443677304426769420482379875618894",
    "0.021931529180311497899831151025645368447720580224621", "-0.024841008935782199978276659784759973249344139575591", "-0.23842973966373864007109265238555740685420578094828",
    "-0.021931529180311497899831151025645368447720580224621", "0.024841008935782199978276659784759973249344139575591", "-0.23842973966373864007109265238555740685420578094828",
    "-0.13269899534115205954334186623693052458668735642557", "1.3833470352103847314508134893637998645487877244953e-81", "-0.21471148473494798038558129789119140842417585709834",
    "-0.024841008935782199978276659784759973249344139575591", "-0.23842973966373864007109265238555740685420578094828", "0.021931529180311497899831151025645368447720580224621",
    "0.024841008935782199978276659784759973249344139575591", "-0.23842973966373864007109265238555740685420578094828", "-0.021931529180311497899831151025645368447720580224621",
    "1.3833470352103847314508134893637998645487877244953e-81", "-0.21471148473494798038558129789119140842417585709834", "-0.13269899534115205954334186623693052458668735642557",
    "0.042616278543866226345094806758337323837698549144108", "-0.12928155573279475563431960811786320203040702475933", "-0.19853700059090380865997566183643687035856202513326",
    "-1.1721286641284311358055658580998918982853123625407e-81", "-0.08589472488568548007579050720948547939778203223789", "-0.22487530920504601319624222415250376175734904788416",
    "-0.12928155573279475563431960811786320203040702475933", "-0.19853700059090380865997566183643687035856202513326", "0.042616278543866226345094806758337323837698549144108",
    "-0.08589472488568548007579050720948547939778203223789", "-0.22487530920504601319624222415250376175734904788416", "-1.1721286641284311358055658580998918982853123625407e-81",
    "-0.22487530920504601319624222415250376175734904788416", "-1.1721286641284311358055658580998918982853123625407e-81", "-0.08589472488568548007579050720948547939778203223789",
    "-0.19853700059090380865997566183643687035856202513326", "0.042616278543866226345094806758337323837698549144108", "-0.12928155573279475563431960811786320203040702475933",
    "-0.064547807724177724244925957783982692285419129368729", "-0.093795596093790630859638028859164188485829711470596", "-0.21209143104959643553482609006949051545541875819738",
    "-0.093795596093790630859638028859164188485829711470596", "-0.21209143104959643553482609006949051545541875819738", "-0.064547807724177724244925957783982692285419129368729",
    "-0.082809875316801679900506481951627313425011733438045", "-0.14463414356994800921145462352639321836837606947768", "-0.17369599165512160868169900205167689710921788555767",
    "-0.21209143104959643553482609006949051545541875819738", "-0.064547807724177724244925957783982692285419129368729", "-0.093795596093790630859638028859164188485829711470596",
    "-0.17369599165512160868169900205167689710921788555767", "-0.082809875316801679900506481951627313425011733438045", "-0.14463414356994800921145462352639321836837606947768",
    "-0.13898058431936053312045171694301828235956701564627", "-0.13898058431936053312045171694301828235956701564627", "-0.13898058431936053312045171694301828235956701564627",
    "-0.14463414356994800921145462352639321836837606947768", "-0.17369599165512160868169900205167689710921788555767", "-0.082809875316801679900506481951627313425011733438045",
};
}  // namespace

const CatalogSolid kCatalogSolids[] = {
    {"tetrahedron", "platonic", 4, k_tetrahedron},
    {"cube", "platonic", 8, k_cube},
    {"octahedron", "platonic", 6, k_octahedron},
    {"dodecahedron", "platonic", 20, k_dodecahedron},
    {"icosahedron", "platonic", 12, k_icosahedron},
    {"truncated_tetrahedron", "archimedean", 12, k_truncated_tetrahedron},
    {"cuboctahedron", "archimedean", 12, k_cuboctahedron},
    {"truncated_cube", "archimedean", 24, k_truncated_cube},
    {"truncated_octahedron", "archimedean", 24, k_truncated_octahedron},
    {"rhombicuboctahedron", "archimedean", 24, k_rhombicuboctahedron},
    {"truncated_cuboctahedron", "archimedean", 48, k_truncated_cuboctahedron},
    {"snub_cube", "archimedean", 24, k_snub_cube},
    {"icosidodecahedron", "archimedean", 30, k_icosidodecahedron},
    {"truncated_dodecahedron", "archimedean", 60, k_truncated_dodecahedron},
    {"truncated_icosahedron", "archimedean", 60, k_truncated_icosahedron},
    {"rhombicosidodecahedron", "archimedean", 60, k_rhombicosidodecahedron},
    {"truncated_icosidodecahedron", "archimedean", 120, k_truncated_icosidodecahedron},
    {"snub_dodecahedron", "archimedean", 60, k_snub_dodecahedron},
    {"triakis_tetrahedron", "catalan", 8, k_triakis_tetrahedron},
    {"rhombic_dodecahedron", "catalan", 14, k_rhombic_dodecahedron},
    {"triakis_octahedron", "catalan", 14, k_triakis_octahedron},
    {"tetrakis_hexahedron", "catalan", 14, k_tetrakis_hexahedron},
    {"deltoidal_icositetrahedron", "catalan", 26, k_deltoidal_icositetrahedron},
    {"disdyakis_dodecahedron", "catalan", 26, k_disdyakis_dodecahedron},
    {"pentagonal_icositetrahedron", "catalan", 38, k_pentagonal_icositetrahedron},
    {"rhombic_triacontahedron", "catalan", 32, k_rhombic_triacontahedron},
    {"triakis_icosahedron", "catalan", 32, k_triakis_icosahedron},
    {"pentakis_dodecahedron", "catalan", 32, k_pentakis_dodecahedron},
    {"deltoidal_hexecontahedron", "catalan", 62, k_deltoidal_hexecontahedron},
    {"disdyakis_triacontahedron", "catalan", 62, k_disdyakis_triacontahedron},
    {"pentagonal_hexecontahedron", "catalan", 92, k_pentagonal_hexecontahedron},
};
const int kCatalogSolidCount = 31;

}  // namespace rupert
