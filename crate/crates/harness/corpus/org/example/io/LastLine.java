package org.example.io;

public class LastLine {
    public List<String> lastLine(String path) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            String last = line;
            while (line != null) {
                last = line;
                line = reader.readLine();
            }
            out.add(last.trim());
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> lastKey(String file) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(file));
            String line = reader.readLine();
            String last = line;
            while (line != null) {
                last = line;
                line = reader.readLine();
            }
            out.add(last.trim());
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> lastConfig(String location) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(location));
            String line = reader.readLine();
            String last = line;
            while (line != null) {
                last = line;
                line = reader.readLine();
            }
            out.add(last.trim());
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> lastHistory(String name) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(name));
            String line = reader.readLine();
            String last = line;
            while (line != null) {
                last = line;
                line = reader.readLine();
            }
            out.add(last.trim());
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> lastManifest(String source) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(source));
            String line = reader.readLine();
            String last = line;
            while (line != null) {
                last = line;
                line = reader.readLine();
            }
            out.add(last.trim());
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }
}
