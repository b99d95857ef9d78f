"""Name and place pools for the demo schema, corpus generator and tests.

Romanized Bangla given names and surnames, the 64 districts and 8 divisions
of Bangladesh, a sample of upazilas and villages, and occupations. All
ASCII, as they appear in romanized records.
"""

from __future__ import annotations

DIVISIONS = (
    "Barisal", "Chittagong", "Dhaka", "Khulna",
    "Mymensingh", "Rajshahi", "Rangpur", "Sylhet",
)

# The 64 districts, romanized spellings.
DISTRICTS = (
    "Bagerhat", "Bandarban", "Barguna", "Barisal", "Bhola", "Bogura",
    "Brahmanbaria", "Chandpur", "Chapainawabganj", "Chattogram",
    "Chuadanga", "Comilla", "Coxs Bazar", "Dhaka", "Dinajpur", "Faridpur",
    "Feni", "Gaibandha", "Gazipur", "Gopalganj", "Habiganj", "Jamalpur",
    "Jashore", "Jhalakathi", "Jhenaidah", "Joypurhat", "Khagrachhari",
    "Khulna", "Kishoreganj", "Kurigram", "Kushtia", "Lakshmipur",
    "Lalmonirhat", "Madaripur", "Magura", "Manikganj", "Meherpur",
    "Moulvibazar", "Munshiganj", "Mymensingh", "Naogaon", "Narail",
    "Narayanganj", "Narsingdi", "Natore", "Netrokona", "Nilphamari",
    "Noakhali", "Pabna", "Panchagarh", "Patuakhali", "Pirojpur",
    "Rajbari", "Rajshahi", "Rangamati", "Rangpur", "Satkhira",
    "Shariatpur", "Sherpur", "Sirajganj", "Sunamganj", "Sylhet",
    "Tangail", "Thakurgaon",
)

GIVEN_NAMES = (
    "Abdullah", "Abdul", "Abid", "Adnan", "Afia", "Afroza", "Aisha",
    "Akash", "Akhi", "Alamgir", "Alif", "Amina", "Amit", "Anika", "Anil",
    "Anisur", "Anwar", "Arafat", "Arif", "Arjun", "Asad", "Ashraf",
    "Asma", "Atiq", "Ayesha", "Azad", "Babul", "Badal", "Bashir",
    "Bijoy", "Bilkis", "Bithi", "Borhan", "Chameli", "Chandan", "Dalia",
    "Delowar", "Dipa", "Dipu", "Dilruba", "Ebrahim", "Emon", "Enamul",
    "Eshita", "Farhan", "Farida", "Faruk", "Fatema", "Fazlul", "Feroza",
    "Firoz", "Gazi", "Gias", "Gopal", "Habib", "Hafiz", "Halima",
    "Hamid", "Hasan", "Hasina", "Hira", "Hossain", "Humayun", "Ibrahim",
    "Ibtihal", "Idris", "Imran", "Iqbal", "Ismail", "Jahanara", "Jahangir",
    "Jamal", "Jamila", "Jashim", "Javed", "Jesmin", "Jewel", "Jhuma",
    "Joynal", "Jubayer", "Kabir", "Kajol", "Kamal", "Kamrul", "Karim",
    "Kawsar", "Khadija", "Khaleda", "Khalil", "Kohinoor", "Kulsum",
    "Laila", "Laki", "Lipi", "Liton", "Lutfor", "Mahbub", "Mahfuz",
    "Mahmud", "Mainul", "Malek", "Mamun", "Manik", "Mannan", "Masud",
    "Matin", "Meghla", "Meher", "Milon", "Mintu", "Mizan", "Mohsin",
    "Mokbul", "Momena", "Monir", "Monira", "Morium", "Mostafa", "Motaleb",
    "Mukta", "Munna", "Murad", "Mustafiz", "Nadia", "Nahid", "Naim",
    "Nargis", "Nasir", "Nasrin", "Nazma", "Nazrul", "Nilufa", "Nipa",
    "Nizam", "Nur", "Nurjahan", "Omar", "Palash", "Parul", "Parvez",
    "Parvin", "Polash", "Prodip", "Rabeya", "Rafiq", "Rahim", "Rahima",
    "Rajib", "Rakib", "Ramij", "Rana", "Rashed", "Rashida", "Ratan",
    "Razia", "Reza", "Rina", "Ripon", "Robiul", "Rohan", "Rokeya",
    "Romana", "Roni", "Rubel", "Rubina", "Ruhul", "Rumana", "Rumi",
    "Runa", "Rupa", "Sabbir", "Sabina", "Sabuj", "Sadek", "Saiful",
    "Sajib", "Salam", "Saleha", "Salim", "Salma", "Samir", "Sanjida",
    "Sathi", "Sattar", "Selina", "Shafiq", "Shahadat", "Shahana",
    "Shahin", "Shahnaz", "Shakil", "Shamim", "Shampa", "Shanta",
    "Sharif", "Shawon", "Shefali", "Shilpi", "Shimul", "Shirin",
    "Shohag", "Shukla", "Siddique", "Sohel", "Sultana", "Sumaiya",
    "Suman", "Sumon", "Sumona", "Tahmina", "Tajul", "Tamanna", "Tanvir",
    "Tareq", "Taslima", "Tipu", "Titas", "Tuhin", "Yasmin", "Zahid",
    "Zakir", "Zannat", "Zubaida",
)

SURNAMES = (
    "Ahmed", "Akter", "Alam", "Ali", "Aziz", "Barua", "Begum", "Bepari",
    "Bhuiyan", "Biswas", "Chakma", "Chowdhury", "Das", "Dewan", "Fakir",
    "Gazi", "Ghosh", "Haque", "Hawlader", "Hossain", "Howlader", "Islam",
    "Joarder", "Kazi", "Khan", "Khandaker", "Khatun", "Majumder", "Mia",
    "Mallik", "Mandal", "Matbor", "Miah", "Mollah", "Molla", "Mondol",
    "Mridha", "Munshi", "Paik", "Pal", "Patwari", "Pramanik", "Prodhan",
    "Rahman", "Ray", "Roy", "Saha", "Sarkar", "Sarder", "Shaikh",
    "Sheikh", "Shikder", "Sikder", "Sultana", "Talukder", "Tarafdar",
    "Uddin",
)

UPAZILAS = (
    "Agailjhara", "Alamdanga", "Araihazar", "Atghoria", "Bakerganj",
    "Banaripara", "Bancharampur", "Bera", "Bhandaria", "Bheramara",
    "Birampur", "Birganj", "Boalkhali", "Chandina", "Charghat",
    "Chirirbandar", "Daganbhuiyan", "Damurhuda", "Daudkandi", "Debhata",
    "Delduar", "Dhamrai", "Dumuria", "Fulbari", "Gabtali", "Gaffargaon",
    "Galachipa", "Ghatail", "Ghoraghat", "Gournadi", "Haimchar",
    "Hathazari", "Homna", "Jaldhaka", "Kahaloo", "Kalapara", "Kaliganj",
    "Kalkini", "Kamalganj", "Kaptai", "Katiadi", "Kawkhali", "Keraniganj",
    "Khaliajuri", "Khansama", "Kotalipara", "Kulaura", "Lalpur", "Lohagara",
    "Madhabpur", "Madhupur", "Manda", "Mathbaria", "Matlab", "Mirsharai",
    "Mithapukur", "Mohanpur", "Monohardi", "Muladi", "Nabiganj",
    "Nagarkanda", "Nakla", "Nandail", "Nangalkot", "Nawabganj", "Nazirpur",
    "Pakundia", "Palashbari", "Panchbibi", "Parbatipur", "Patgram",
    "Phulpur", "Pirgachha", "Raipura", "Rajoir", "Ramgati", "Raninagar",
    "Raozan", "Saltha", "Sarail", "Savar", "Senbagh", "Shahjadpur",
    "Shibchar", "Sitakunda", "Sonargaon", "Sreemangal", "Sreepur",
    "Sujanagar", "Tarash", "Teknaf", "Titash", "Trishal", "Ulipur",
    "Wazirpur", "Zanjira",
)

VILLAGES = (
    "Amtali", "Baghmara", "Baliadangi", "Bamna", "Baraipara", "Beltola",
    "Bhabanipur", "Birpasha", "Chakamaiya", "Chandpara", "Charfasson",
    "Dakshinpara", "Dariapur", "Dattapara", "Dogachhi", "Fatehpur",
    "Gobindapur", "Gorea", "Haripur", "Hatibandha", "Islampur",
    "Jagannathpur", "Kabai", "Kadamtala", "Kalikapur", "Kanchanpur",
    "Kathalia", "Krishnapur", "Lakshmipasha", "Madhabdi", "Meherpara",
    "Mirzapur", "Naikhong", "Nandipara", "Nayanpur", "Nishanbaria",
    "Panchgachhia", "Rabglipara", "Radhanagar", "Rahimganj", "Ramchandrapur",
    "Rampur", "Rasulpur", "Ratanpur", "Shantinagar", "Shibpur",
    "Shyamnagar", "Sonapur", "Sultanpur", "Tetulia",
)

OCCUPATIONS = (
    "Accountant", "Banker", "Blacksmith", "Businessman", "Carpenter",
    "Clerk", "Doctor", "Driver", "Electrician", "Employee", "Engineer",
    "Farmer", "Fisherman", "Housewife", "Imam", "Journalist", "Lawyer",
    "Mason", "Mechanic", "Nurse", "Painter", "Pharmacist", "Police",
    "Potter", "Professor", "Rickshawpuller", "Shopkeeper", "Student",
    "Tailor", "Teacher", "Trader", "Weaver",
)

#: Field layout of the bundled demo table.
CITIZEN_FIELDS = (
    "name", "division", "district", "upazila",
    "union", "village", "occupation", "phone",
)

ALL_POOLS = {
    "divisions": DIVISIONS,
    "districts": DISTRICTS,
    "given_names": GIVEN_NAMES,
    "surnames": SURNAMES,
    "upazilas": UPAZILAS,
    "villages": VILLAGES,
    "occupations": OCCUPATIONS,
}
